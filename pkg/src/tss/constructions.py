"""Seed-set builders with explicit convinced sequences, one per theorem case.

Each builder assembles the prescribed seed and activation order in the
1-based torus coordinates (or cycle labels) of the source construction,
maps them to vertex ids, and self-verifies by simulation before returning:
a report is only produced when the seed influences the whole graph and the
convinced sequence validates step by step.

Case tags: T3 (cycle permutation), T4 (generalized Petersen), T5 (n=3 torus),
T6a/T6b/T6c (n=3s), T7c1..T7c3 (n=3s+1), T8c1..T8c6 (n=3s+2), T9even/T9odd
(m=3t), fallback.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .activation import extract_convinced_sequence, is_influencing, validate_convinced_sequence
from .bounds import flocchini_upper, tss_lower_bound_torus
from .errors import BadParam, ConstructionFailedVerification, TssError
from .families import (
    check_permutation,
    cycle_permutation,
    generalized_petersen,
    torus_cordalis,
    torus_vertex_id,
)
from .graph import Graph
from .thresholds import constant_threshold

Coord = tuple[int, int]

EXACT = "exact"
UPPER = "upper_bound"
GAP_ONE = "upper_bound_gap_one"


@dataclass(frozen=True)
class SeedReport:
    family: str
    params: dict = field(compare=False)
    seed: frozenset[int] = frozenset()
    size: int = 0
    theorem_case: str = ""
    claimed_value_kind: str = EXACT
    lower_bound: int = 0
    convinced_sequence: tuple[int, ...] = ()
    verified: bool = False

    def to_dict(self) -> dict:
        out = {"family": self.family}
        out.update(self.params)
        out.update(
            {
                "case": self.theorem_case,
                "size": self.size,
                "kind": self.claimed_value_kind,
                "lower_bound": self.lower_bound,
                "seed": sorted(self.seed),
                "verified": self.verified,
            }
        )
        return out


def _irange(a: int, b: int) -> range:
    """Inclusive integer range; empty when b < a."""
    return range(a, b + 1)


def formula_value(case: str, m: int, n: int) -> int | None:
    """Closed-form size for a torus case tag, or None for the fallback.

    For the gap-one case this is the construction size ms+2 (the matching
    lower bound is ms+1).
    """
    if case == "T5":
        return m + 1
    if case in ("T6a", "T6b", "T6c"):
        s = n // 3
        return m * s + (2 if case == "T6c" else 1)
    if case in ("T7c1", "T7c2", "T7c3"):
        s = (n - 1) // 3
        extra = {"T7c1": (m + 1) // 2, "T7c2": m // 2, "T7c3": m // 2 + 1}[case]
        return m * s + extra
    if case.startswith("T8"):
        s = (n - 2) // 3
        t = m // 4
        return {
            "T8c1": 4 * t * s + 3 * t,
            "T8c2": 4 * t * s + 3 * t + 1,
            "T8c3": (4 * t + 1) * s + 3 * t + 1,
            "T8c4": (4 * t + 2) * s + 3 * t + 2,
            "T8c5": (4 * t + 2) * s + 3 * t + 3,
            "T8c6": (4 * t + 3) * s + 3 * t + 3,
        }[case]
    if case in ("T9even", "T9odd"):
        return m * n // 3 + 1
    return None


def _verified_report(
    g: Graph,
    k: int,
    seed_ids: Sequence[int],
    alpha_ids: Sequence[int],
    *,
    family: str,
    params: dict,
    case: str,
    kind: str,
    expected_size: int,
    lower_bound: int,
) -> SeedReport:
    """Shared verification gate: size, coverage, closure, and sequence check."""
    theta = constant_threshold(g, k)
    seed = frozenset(seed_ids)
    if len(seed) != expected_size:
        raise ConstructionFailedVerification(
            f"{case}: seed has {len(seed)} vertices, formula says {expected_size}"
        )
    alpha = tuple(alpha_ids)
    if len(seed) + len(alpha) != g.vertex_count or seed & set(alpha):
        raise ConstructionFailedVerification(
            f"{case}: seed and sequence do not partition the vertex set"
        )
    try:
        check = validate_convinced_sequence(g, theta, seed, alpha)
    except TssError as exc:
        raise ConstructionFailedVerification(f"{case}: bad sequence: {exc}") from exc
    if not check.ok:
        raise ConstructionFailedVerification(
            f"{case}: sequence fails at position {check.failing_position} "
            f"({check.active_neighbors} of {check.required} active neighbors)"
        )
    if not check.full_influence or not is_influencing(g, theta, seed):
        raise ConstructionFailedVerification(f"{case}: seed does not influence the graph")
    return SeedReport(
        family=family,
        params=params,
        seed=seed,
        size=len(seed),
        theorem_case=case,
        claimed_value_kind=kind,
        lower_bound=lower_bound,
        convinced_sequence=alpha,
        verified=True,
    )


def _torus_report(
    m: int,
    n: int,
    case: str,
    kind: str,
    expected_size: int,
    seed_coords: Sequence[Coord],
    alpha_coords: Sequence[Coord],
) -> SeedReport:
    g = torus_cordalis(m, n)
    vid = lambda c: torus_vertex_id(m, n, c[0], c[1])
    return _verified_report(
        g,
        3,
        [vid(c) for c in seed_coords],
        [vid(c) for c in alpha_coords],
        family="torus_cordalis",
        params={"m": m, "n": n},
        case=case,
        kind=kind,
        expected_size=expected_size,
        lower_bound=tss_lower_bound_torus(m, n),
    )


# ---------------------------------------------------------------------------
# 2-threshold builders: paths, cycle permutation graphs, generalized Petersen
# ---------------------------------------------------------------------------

def _path_positions_k2(p: int) -> tuple[list[int], list[int]]:
    """1-based seed positions and activation order for a p-path at threshold 2.

    Seeds every odd position plus the last one when p is even, so both
    endpoints are seeded and every gap vertex sits between two seeds.
    """
    seeds = list(range(1, p + 1, 2))
    if p % 2 == 0:
        seeds.append(p)
    return seeds, list(range(2, p, 2))


def path_seed_k2(p: int) -> frozenset[int]:
    """Minimum seed for the p-path at constant threshold 2 (both ends seeded)."""
    if p < 2:
        raise BadParam("path seed needs p >= 2")
    seeds, _ = _path_positions_k2(p)
    return frozenset(t - 1 for t in seeds)


def seed_cycle_permutation(n: int, permutation: Sequence[int]) -> SeedReport:
    """Size-ceil((n+1)/2) seed for a cycle permutation graph at threshold 2.

    Seeds an alternating set on the v-path v_3..v_n (relabeled so the matching
    edge u_1 v_1 exists) plus u_1; the activation order finishes the v-cycle
    and then walks the whole u-cycle.
    """
    if n < 4:
        raise BadParam("cycle permutation seed needs n >= 4")
    pi = check_permutation(permutation)
    if len(pi) != n:
        raise BadParam(f"permutation length {len(pi)} != {n}")
    g = cycle_permutation(n, pi)
    # rotate the v-cycle so that the ("v_1", "u_1") matching edge exists
    shift = pi.index(0)
    rho = lambda k: (k + shift) % n
    p = n - 2
    spos, apos = _path_positions_k2(p)
    seed = [rho(t + 1) for t in spos] + [n]  # id n is u_1
    alpha = [rho(t + 1) for t in apos]
    alpha += [rho(0), rho(1)]
    alpha += [n + i for i in range(1, n)]
    return _verified_report(
        g,
        2,
        seed,
        alpha,
        family="cycle_permutation",
        params={"n": n, "pi": [x + 1 for x in pi]},
        case="T3",
        kind=EXACT,
        expected_size=(n + 2) // 2,
        lower_bound=(n + 2) // 2,
    )


def seed_generalized_petersen(m: int, s: int) -> SeedReport:
    """Size-ceil((m+1)/2) seed for P(m,s) at threshold 2.

    Seeds an alternating set on the outer path v_{s+1}..v_{m-s} plus the inner
    vertices u_1..u_s; activation sweeps the remaining outer arc and then both
    inner arcs.
    """
    g = generalized_petersen(m, s)  # validates m, s
    p = m - 2 * s  # >= 1
    spos, apos = _path_positions_k2(p)
    seed = [s + t - 1 for t in spos] + [m + i for i in range(s)]
    alpha = [s + t - 1 for t in apos]
    alpha += [i - 1 for i in range(s, 0, -1)]  # v_s .. v_1
    alpha += [m + i - 1 for i in _irange(s + 1, m - s)]  # u_{s+1} .. u_{m-s}
    alpha += [m + i - 1 for i in _irange(m - s + 1, m)]  # u_{m-s+1} .. u_m
    alpha += [i - 1 for i in _irange(m - s + 1, m)]  # v_{m-s+1} .. v_m
    return _verified_report(
        g,
        2,
        seed,
        alpha,
        family="generalized_petersen",
        params={"m": m, "s": s},
        case="T4",
        kind=EXACT,
        expected_size=(m + 2) // 2,
        lower_bound=(m + 2) // 2,
    )


# ---------------------------------------------------------------------------
# Torus cordalis builders (threshold 3 everywhere)
# ---------------------------------------------------------------------------

def seed_cordalis_n3(m: int) -> SeedReport:
    """Exact m+1 seed for the m x 3 torus cordalis."""
    if m < 3:
        raise BadParam("need m >= 3")
    s1 = [(2 * i + 1, 1) for i in _irange(0, (m - 1) // 2)]
    s2 = [(2 * i, 2) for i in _irange(1, m // 2)]
    seed = s1 + s2 + [(1, 3)]
    a1 = [(2 * i, 1) for i in _irange(1, m // 2)]
    a2 = [(2 * i + 1, 2) for i in _irange(0, (m - 1) // 2)]
    a3 = [(i, 3) for i in _irange(2, m)]
    return _torus_report(m, 3, "T5", EXACT, m + 1, seed, a1 + a2 + a3)


def _t6_shared_sets(m: int, s: int, inner_top: int) -> tuple[list[Coord], list[Coord]]:
    s1 = [
        c
        for j in _irange(0, s - 1)
        for c in (
            (1, 1 + 3 * j),
            (2, 2 + 3 * j),
            (3, 1 + 3 * j),
            (4, 3 + 3 * j),
            (5, 2 + 3 * j),
        )
    ]
    s2 = [
        c
        for j in _irange(0, s - 1)
        for i in _irange(0, inner_top)
        for c in ((6 + 2 * i, 3 + 3 * j), (7 + 2 * i, 2 + 3 * j))
    ]
    return s1, s2


def _t6_alpha12(m: int, s: int, inner_top: int) -> list[Coord]:
    a1 = [
        c
        for j in _irange(0, s - 1)
        for c in ((1, 2 + 3 * j), (2, 1 + 3 * j))
    ]
    a2 = [
        c
        for j in _irange(0, s - 1)
        for i in _irange(0, inner_top)
        for c in ((5 + 2 * i, 3 + 3 * j), (6 + 2 * i, 2 + 3 * j))
    ]
    return a1 + a2


def seed_cordalis_n3s(m: int, s: int) -> SeedReport:
    """Seeds for the m x 3s torus cordalis, s >= 2.

    Odd m >= 5 and even m >= 8 with even s give the exact value ms+1; even m
    with odd s gives ms+2 with a one-away lower bound.
    """
    if s < 2:
        raise BadParam("need s >= 2 (use the n=3 builder for s=1)")
    n = 3 * s
    if m % 2 == 1:
        if m < 5:
            raise BadParam("odd case needs m >= 5")
        alpha = _t6_alpha12(m, s, (m - 7) // 2)
        alpha += [(i, 1) for i in _irange(5, m)]
        alpha += [(4, 2), (3, 2), (3, 3), (2, 3), (1, 3), (m, 3)]
        for j in _irange(0, s - 2):
            alpha += [(i, 4 + 3 * j) for i in range(m, 3, -1)]
            alpha += [
                (4, 5 + 3 * j),
                (3, 5 + 3 * j),
                (3, 6 + 3 * j),
                (2, 6 + 3 * j),
                (1, 6 + 3 * j),
                (m, 6 + 3 * j),
            ]
        s1, s2 = _t6_shared_sets(m, s, (m - 7) // 2)
        seed = s1 + s2 + [(4, 1)]
        return _torus_report(m, n, "T6a", EXACT, m * s + 1, seed, alpha)

    if m < 8:
        raise BadParam("even case needs m >= 8")
    s1, s2 = _t6_shared_sets(m, s, (m - 10) // 2)
    s3 = [
        c
        for j in _irange(0, s - 1)
        for c in ((m - 2, 1 + 3 * j), (m - 1, 3 + 3 * j), (m, 2 + 3 * j))
    ]
    if s % 2 == 0:
        seed = s1 + s2 + s3 + [(4, 1)]
        alpha = _t6_alpha12(m, s, (m - 10) // 2)
        alpha += [(i, 1) for i in _irange(5, m - 3)] + [(m - 3, n)]
        alpha += [(4, 2), (3, 2), (3, 3), (2, 3), (1, 3), (m, 3)]
        for k in _irange(0, (s - 4) // 2):
            c = 6 * k
            alpha += [
                (m, 4 + c), (m - 1, 4 + c), (m - 1, 5 + c),
                (m - 2, 5 + c), (m - 2, 6 + c), (m - 3, 6 + c),
            ]
            alpha += [(i, 7 + c) for i in range(m - 3, 3, -1)]
            alpha += [(4, 8 + c), (3, 8 + c), (3, 9 + c), (2, 9 + c), (1, 9 + c), (m, 9 + c)]
        alpha += [(m, n - 2), (m - 1, n - 2), (m - 1, n - 1), (m - 2, n - 1), (m - 2, n)]
        for k in _irange(0, (s - 2) // 2):
            c = 6 * k
            alpha += [
                (m, 1 + c), (m - 1, 1 + c), (m - 1, 2 + c),
                (m - 2, 2 + c), (m - 2, 3 + c), (m - 3, 3 + c),
            ]
            alpha += [(i, 4 + c) for i in range(m - 3, 3, -1)]
            alpha += [(4, 5 + c), (3, 5 + c), (3, 6 + c), (2, 6 + c), (1, 6 + c), (m, 6 + c)]
        return _torus_report(m, n, "T6b", EXACT, m * s + 1, seed, alpha)

    seed = s1 + s2 + s3 + [(4, 1), (m - 1, 1)]
    alpha = _t6_alpha12(m, s, (m - 10) // 2)
    alpha += [(i, 1) for i in _irange(5, m - 3)]
    alpha += [(4, 2), (3, 2), (3, 3), (2, 3), (1, 3), (m, 3)]
    alpha += [(m, 1), (m - 1, 2), (m - 2, 2), (m - 2, 3), (m - 3, 3)]
    for k in _irange(0, (s - 3) // 2):
        c = 6 * k
        alpha += [(i, 4 + c) for i in range(m - 3, 3, -1)]
        alpha += [(4, 5 + c), (3, 5 + c), (3, 6 + c), (2, 6 + c), (1, 6 + c), (m, 6 + c)]
        alpha += [
            (m, 7 + c), (m - 1, 7 + c), (m - 1, 8 + c),
            (m - 2, 8 + c), (m - 2, 9 + c), (m - 3, 9 + c),
        ]
    for k in _irange(0, (s - 3) // 2):
        c = 6 * k
        alpha += [
            (m, 4 + c), (m - 1, 4 + c), (m - 1, 5 + c),
            (m - 2, 5 + c), (m - 2, 6 + c), (m - 3, 6 + c),
        ]
        alpha += [(i, 7 + c) for i in range(m - 3, 3, -1)]
        alpha += [(4, 8 + c), (3, 8 + c), (3, 9 + c), (2, 9 + c), (1, 9 + c), (m, 9 + c)]
    return _torus_report(m, n, "T6c", GAP_ONE, m * s + 2, seed, alpha)


def seed_cordalis_n1mod3(m: int, n: int) -> SeedReport:
    """Seeds for the m x n torus cordalis with n = 3s+1 (upper bounds)."""
    if n < 4 or n % 3 != 1:
        raise BadParam("need n >= 4 with n = 3s+1")
    s = (n - 1) // 3

    if m % 2 == 1:
        if m < 5:
            raise BadParam("odd case needs m >= 5")
        s1 = [
            c
            for j in _irange(0, s - 1)
            for c in (
                (1, 2 + 3 * j), (2, 3 + 3 * j), (3, 2 + 3 * j),
                (4, 4 + 3 * j), (5, 3 + 3 * j),
            )
        ]
        s2 = [(i, 1) for i in range(6, m, 2)]
        s3 = [
            c
            for j in _irange(0, s - 1)
            for i in _irange(0, (m - 7) // 2)
            for c in ((6 + 2 * i, 4 + 3 * j), (7 + 2 * i, 3 + 3 * j))
        ]
        seed = [(1, 1), (2, 1), (4, 1)] + s1 + s2 + s3
        alpha = [
            c for j in _irange(0, s - 1) for c in ((1, 3 + 3 * j), (2, 2 + 3 * j))
        ]
        alpha += [
            c
            for j in _irange(0, s - 1)
            for i in _irange(0, (m - 7) // 2)
            for c in ((5 + 2 * i, 4 + 3 * j), (6 + 2 * i, 3 + 3 * j))
        ]
        alpha += [(i, 1) for i in range(3, m + 1, 2)]
        for j in _irange(0, s - 1):
            c = 3 * j
            alpha += [(i, 2 + c) for i in range(m, 3, -1)]
            alpha += [(4, 3 + c), (3, 3 + c), (3, 4 + c), (2, 4 + c), (1, 4 + c), (m, 4 + c)]
        return _torus_report(m, n, "T7c1", UPPER, m * s + (m + 1) // 2, seed, alpha)

    if m < 8:
        raise BadParam("even case needs m >= 8")
    s1 = [
        c
        for j in _irange(0, s - 1)
        for c in (
            (1, 2 + 3 * j), (2, 3 + 3 * j), (3, 2 + 3 * j),
            (4, 4 + 3 * j), (5, 3 + 3 * j),
        )
    ]
    s2 = [(i, 1) for i in range(6, m - 3, 2)]
    s3 = [
        c
        for j in _irange(0, s - 1)
        for i in _irange(0, (m - 10) // 2)
        for c in ((6 + 2 * i, 4 + 3 * j), (7 + 2 * i, 3 + 3 * j))
    ]
    s4 = [
        c
        for j in _irange(0, s - 1)
        for c in ((m - 2, 2 + 3 * j), (m - 1, 4 + 3 * j), (m, 3 + 3 * j))
    ]
    alpha = [c for j in _irange(0, s - 1) for c in ((1, 3 + 3 * j), (2, 2 + 3 * j))]
    alpha += [
        c
        for j in _irange(0, s - 1)
        for i in _irange(0, (m - 10) // 2)
        for c in ((5 + 2 * i, 4 + 3 * j), (6 + 2 * i, 3 + 3 * j))
    ]
    if s % 2 == 1:
        seed = s1 + s2 + s3 + s4 + [(1, 1), (2, 1), (4, 1), (m - 1, 1)]
        alpha += [(i, 1) for i in range(3, m - 4, 2)]
        alpha += [(m, 1), (m, 2), (m - 1, 2), (m - 1, 3), (m - 2, 3), (m - 2, 4), (m - 3, 4)]
        for k in _irange(0, (s - 3) // 2):
            c = 6 * k
            alpha += [(i, 5 + c) for i in range(m - 3, 3, -1)]
            alpha += [(4, 6 + c), (3, 6 + c), (3, 7 + c), (2, 7 + c), (1, 7 + c), (m, 7 + c)]
            alpha += [
                (m, 8 + c), (m - 1, 8 + c), (m - 1, 9 + c),
                (m - 2, 9 + c), (m - 2, 10 + c), (m - 3, 10 + c),
            ]
        alpha += [(m - 2, 1), (m - 3, 1)]
        alpha += [(i, 2) for i in range(m - 3, 3, -1)]
        alpha += [(4, 3), (3, 3), (3, 4), (2, 4), (1, 4), (m, 4)]
        for k in _irange(0, (s - 3) // 2):
            c = 6 * k
            alpha += [
                (m, 5 + c), (m - 1, 5 + c), (m - 1, 6 + c),
                (m - 2, 6 + c), (m - 2, 7 + c), (m - 3, 7 + c),
            ]
            alpha += [(i, 8 + c) for i in range(m - 3, 3, -1)]
            alpha += [(4, 9 + c), (3, 9 + c), (3, 10 + c), (2, 10 + c), (1, 10 + c), (m, 10 + c)]
        return _torus_report(m, n, "T7c2", UPPER, m * s + m // 2, seed, alpha)

    seed = s1 + s2 + s3 + s4 + [(1, 1), (2, 1), (4, 1), (m - 2, 1), (m - 1, 1)]
    alpha += [(i, 1) for i in range(3, m - 2, 2)] + [(m, 1)]
    for k in _irange(0, (s - 2) // 2):
        c = 6 * k
        alpha += [(i, 2 + c) for i in range(m - 3, 3, -1)]
        alpha += [(4, 3 + c), (3, 3 + c), (3, 4 + c), (2, 4 + c), (1, 4 + c), (m, 4 + c)]
        alpha += [
            (m, 5 + c), (m - 1, 5 + c), (m - 1, 6 + c),
            (m - 2, 6 + c), (m - 2, 7 + c), (m - 3, 7 + c),
        ]
    for k in _irange(0, (s - 2) // 2):
        c = 6 * k
        alpha += [
            (m, 2 + c), (m - 1, 2 + c), (m - 1, 3 + c),
            (m - 2, 3 + c), (m - 2, 4 + c), (m - 3, 4 + c),
        ]
        alpha += [(i, 5 + c) for i in range(m - 3, 3, -1)]
        alpha += [(4, 6 + c), (3, 6 + c), (3, 7 + c), (2, 7 + c), (1, 7 + c), (m, 7 + c)]
    return _torus_report(m, n, "T7c3", UPPER, m * s + m // 2 + 1, seed, alpha)


def _t8_sets(m: int, s: int, first: int, top: int, wide: bool):
    """The four seed blocks shared by the n=3s+2 cases.

    `first` is the first interior row block (4 when the left margin is 3 rows,
    6 when it is 5), `top` the inclusive upper block index, `wide` selects the
    5-row right margin over the 2-row one.
    """
    left = (
        [(1, 3), (2, 4), (3, 3)] if first == 4 else [(1, 3), (2, 4), (3, 3), (4, 5), (5, 3)]
    )
    s1 = [(r, c + 3 * j) for j in _irange(0, s - 1) for (r, c) in left]
    s2 = [
        c
        for i in _irange(0, top)
        for c in ((first + 4 * i, 1), (first + 2 + 4 * i, 1), (first + 2 + 4 * i, 2))
    ]
    s3 = [
        c
        for j in _irange(0, s - 1)
        for i in _irange(0, top)
        for c in (
            (first + 4 * i, 5 + 3 * j),
            (first + 1 + 4 * i, 3 + 3 * j),
            (first + 2 + 4 * i, 5 + 3 * j),
            (first + 3 + 4 * i, 3 + 3 * j),
        )
    ]
    right = (
        [(m - 4, 5), (m - 3, 4), (m - 2, 3), (m - 1, 5), (m, 4)]
        if wide
        else [(m - 1, 5), (m, 4)]
    )
    s4 = [(r, c + 3 * j) for j in _irange(0, s - 1) for (r, c) in right]
    return s1, s2, s3, s4


def _t8_alpha_head(m: int, s: int, first: int, top: int) -> list[Coord]:
    """Alpha blocks shared by all n=3s+2 cases: the left margin and interior."""
    alpha = [c for j in _irange(0, s - 1) for c in ((1, 4 + 3 * j), (2, 3 + 3 * j))]
    if first == 6:
        alpha += [(4, 2), (5, 1)]
    alpha += [
        c
        for i in _irange(0, top)
        for c in (
            (first + 3 + 4 * i, 1),
            (first + 3 + 4 * i, 2),
            (first + 1 + 4 * i, 1),
            (first + 1 + 4 * i, 2),
            (first + 4 * i, 2),
        )
    ]
    if first == 6:
        alpha += [c for j in _irange(0, s - 1) for c in ((4, 3 + 3 * j), (5, 5 + 3 * j))]
    alpha += [
        c
        for j in _irange(0, s - 1)
        for i in _irange(0, top)
        for c in (
            (first + 4 * i, 3 + 3 * j),
            (first + 1 + 4 * i, 5 + 3 * j),
            (first + 2 + 4 * i, 3 + 3 * j),
            (first + 3 + 4 * i, 5 + 3 * j),
        )
    ]
    return alpha


def _t8_wide_even_tail(m: int, s: int) -> list[Coord]:
    """Right-margin alpha blocks for the wide cases with even s."""
    alpha = [(m - 4, 2), (m - 3, 1)]
    for k in _irange(0, (s - 2) // 2):
        c = 6 * k
        alpha += [(m - 3, 3 + c), (m - 4, 3 + c)]
        alpha += [(i, 4 + c) for i in range(m - 4, 2, -1)]
        alpha += [(3, 5 + c), (2, 5 + c), (1, 5 + c), (m, 5 + c)]
        alpha += [
            (m, 6 + c), (m - 1, 6 + c), (m - 1, 7 + c),
            (m - 2, 7 + c), (m - 2, 8 + c), (m - 3, 8 + c),
        ]
    alpha += [(m - 2, 1), (m - 2, 2), (m - 1, 2), (m, 1)]
    alpha += [(3, 1), (2, 2), (1, 2), (1, 1)]
    for k in _irange(0, (s - 2) // 2):
        c = 6 * k
        alpha += [
            (m, 3 + c), (m - 1, 3 + c), (m - 1, 4 + c), (m - 2, 4 + c),
            (m - 2, 5 + c), (m - 3, 5 + c), (m - 3, 6 + c), (m - 4, 6 + c),
        ]
        alpha += [(i, 7 + c) for i in range(m - 4, 2, -1)]
        alpha += [(3, 8 + c), (2, 8 + c), (1, 8 + c), (m, 8 + c)]
    return alpha


def _t8_wide_odd_tail(m: int, s: int) -> list[Coord]:
    """Right-margin alpha blocks for the wide cases with odd s."""
    alpha = [(m - 4, 2), (m - 3, 1), (m - 2, 2), (m - 1, 2), (m, 1)]
    alpha += [(3, 1), (2, 2), (1, 2), (1, 1)]
    alpha += [(m - 3, 3), (m - 4, 3)]
    alpha += [(i, 4) for i in range(m - 4, 2, -1)]
    alpha += [(3, 5), (2, 5), (1, 5), (m, 5)]
    alpha += [(m, 3), (m - 1, 3), (m - 1, 4), (m - 2, 4), (m - 2, 5), (m - 3, 5)]
    for k in _irange(0, (s - 3) // 2):
        c = 6 * k
        alpha += [(m - 3, 6 + c), (m - 4, 6 + c)]
        alpha += [(i, 7 + c) for i in range(m - 4, 2, -1)]
        alpha += [(3, 8 + c), (2, 8 + c), (1, 8 + c), (m, 8 + c)]
        alpha += [
            (m, 9 + c), (m - 1, 9 + c), (m - 1, 10 + c),
            (m - 2, 10 + c), (m - 2, 11 + c), (m - 3, 11 + c),
        ]
    for k in _irange(0, (s - 3) // 2):
        c = 6 * k
        alpha += [
            (m, 6 + c), (m - 1, 6 + c), (m - 1, 7 + c), (m - 2, 7 + c),
            (m - 2, 8 + c), (m - 3, 8 + c), (m - 3, 9 + c), (m - 4, 9 + c),
        ]
        alpha += [(i, 10 + c) for i in range(m - 4, 2, -1)]
        alpha += [(3, 11 + c), (2, 11 + c), (1, 11 + c), (m, 11 + c)]
    return alpha


def _t8_narrow_tail(m: int, s: int) -> list[Coord]:
    """Right-margin alpha blocks for the 2-row-margin cases (m = 4t+1, 4t+3)."""
    alpha = [(m - 1, 2), (m, 1)]
    alpha += [(3, 1), (2, 2), (1, 2), (1, 1)]
    for j in _irange(0, s - 1):
        c = 3 * j
        alpha += [(m, 3 + c), (m - 1, 3 + c)]
        alpha += [(i, 4 + c) for i in range(m - 1, 2, -1)]
        alpha += [(3, 5 + c), (2, 5 + c), (1, 5 + c), (m, 5 + c)]
    return alpha


def seed_cordalis_n2mod3(m: int, n: int) -> SeedReport:
    """Seeds for the m x n torus cordalis with n = 3s+2, m >= 10, n >= 5.

    Dispatches on m mod 4 and the parity of s into six cases (upper bounds).
    """
    if m < 10:
        raise BadParam("need m >= 10")
    if n < 5 or n % 3 != 2:
        raise BadParam("need n >= 5 with n = 3s+2")
    s = (n - 2) // 3
    t, r = divmod(m, 4)
    if r == 0:
        s1, s2, s3, s4 = _t8_sets(m, s, 4, t - 3, wide=True)
        head = _t8_alpha_head(m, s, 4, t - 3)
        if s % 2 == 0:
            seed = [(2, 1), (3, 2), (m - 4, 1), (m - 3, 2), (m - 1, 1), (m, 2)]
            alpha = head + _t8_wide_even_tail(m, s)
            return _torus_report(
                m, n, "T8c1", UPPER, 4 * t * s + 3 * t, seed + s1 + s2 + s3 + s4, alpha
            )
        seed = [(2, 1), (3, 2), (m - 4, 1), (m - 3, 2), (m - 2, 1), (m - 1, 1), (m, 2)]
        alpha = head + _t8_wide_odd_tail(m, s)
        return _torus_report(
            m, n, "T8c2", UPPER, 4 * t * s + 3 * t + 1, seed + s1 + s2 + s3 + s4, alpha
        )
    if r == 1:
        s1, s2, s3, s4 = _t8_sets(m, s, 4, t - 2, wide=False)
        seed = [(2, 1), (3, 2), (m - 1, 1), (m, 2)]
        alpha = _t8_alpha_head(m, s, 4, t - 2) + _t8_narrow_tail(m, s)
        return _torus_report(
            m, n, "T8c3", UPPER, (4 * t + 1) * s + 3 * t + 1, seed + s1 + s2 + s3 + s4, alpha
        )
    if r == 2:
        s1, s2, s3, s4 = _t8_sets(m, s, 6, t - 3, wide=True)
        head = _t8_alpha_head(m, s, 6, t - 3)
        if s % 2 == 0:
            seed = [(2, 1), (3, 2), (4, 1), (5, 2), (m - 4, 1), (m - 3, 2), (m - 1, 1), (m, 2)]
            alpha = head + _t8_wide_even_tail(m, s)
            return _torus_report(
                m, n, "T8c4", UPPER, (4 * t + 2) * s + 3 * t + 2, seed + s1 + s2 + s3 + s4, alpha
            )
        seed = [
            (2, 1), (3, 2), (4, 1), (5, 2),
            (m - 4, 1), (m - 3, 2), (m - 2, 1), (m - 1, 1), (m, 2),
        ]
        alpha = head + _t8_wide_odd_tail(m, s)
        return _torus_report(
            m, n, "T8c5", UPPER, (4 * t + 2) * s + 3 * t + 3, seed + s1 + s2 + s3 + s4, alpha
        )
    s1, s2, s3, s4 = _t8_sets(m, s, 6, t - 2, wide=False)
    seed = [(2, 1), (3, 2), (4, 1), (5, 2), (m - 1, 1), (m, 2)]
    alpha = _t8_alpha_head(m, s, 6, t - 2) + _t8_narrow_tail(m, s)
    return _torus_report(
        m, n, "T8c6", UPPER, (4 * t + 3) * s + 3 * t + 3, seed + s1 + s2 + s3 + s4, alpha
    )


def seed_cordalis_m0mod3(m: int, n: int) -> SeedReport:
    """Exact mn/3+1 seed for the m x n torus cordalis when 3 divides m.

    Odd n below 5 reduces to the n=3 builder.
    """
    if m < 3 or m % 3 != 0:
        raise BadParam("need m >= 3 with m = 3t")
    if n < 2:
        raise BadParam("need n >= 2")
    t = m // 3
    if n % 2 == 0:
        s1 = [
            c for j in _irange(0, (n - 2) // 2) for c in ((1, 1 + 2 * j), (2, 2 + 2 * j))
        ]
        s2 = [
            c for i in _irange(0, t - 2) for c in ((4 + 3 * i, 2), (6 + 3 * i, 1))
        ]
        s3 = [
            c
            for j in _irange(0, (n - 4) // 2)
            for i in _irange(0, t - 2)
            for c in ((4 + 3 * i, 4 + 2 * j), (5 + 3 * i, 3 + 2 * j))
        ]
        seed = s1 + s2 + s3 + [(3, 1)]
        alpha = [
            c for j in _irange(0, (n - 2) // 2) for c in ((2, 1 + 2 * j), (1, 2 + 2 * j))
        ]
        alpha += [
            c
            for i in _irange(0, t - 2)
            for j in _irange(0, (n - 4) // 2)
            for c in ((4 + 3 * i, 3 + 2 * j), (5 + 3 * i, 4 + 2 * j))
        ]
        alpha += [(3, j) for j in _irange(2, n)]
        for i in _irange(0, t - 2):
            alpha += [(4 + 3 * i, 1), (5 + 3 * i, 1), (5 + 3 * i, 2)]
            alpha += [(6 + 3 * i, j) for j in _irange(2, n)]
        return _torus_report(m, n, "T9even", EXACT, t * n + 1, seed, alpha)

    if n < 5:
        return seed_cordalis_n3(m)
    s1 = [
        c
        for i in _irange(0, t - 1)
        for c in ((1 + 3 * i, 1), (2 + 3 * i, 2), (3 + 3 * i, 3))
    ]
    s2 = [c for j in _irange(0, (n - 5) // 2) for c in ((1, 5 + 2 * j), (2, 4 + 2 * j))]
    s3 = [
        c
        for j in _irange(0, (n - 5) // 2)
        for i in _irange(0, t - 2)
        for c in ((4 + 3 * i, 4 + 2 * j), (5 + 3 * i, 5 + 2 * j))
    ]
    seed = s1 + s2 + s3 + [(1, 3)]
    alpha = [
        c for j in _irange(0, (n - 3) // 2) for c in ((2, 1 + 2 * j), (1, 2 + 2 * j))
    ]
    alpha += [
        c
        for i in _irange(0, t - 2)
        for j in _irange(0, (n - 7) // 2)
        for c in ((4 + 3 * i, 5 + 2 * j), (5 + 3 * i, 6 + 2 * j))
    ]
    for i in _irange(0, t - 2):
        r = 3 * i
        alpha += [(m - r, j) for j in range(n, 3, -1)]
        alpha += [
            (m - 1 - r, 4), (m - 1 - r, 3), (m - 2 - r, 3), (m - 2 - r, 2),
            (m - r, 2), (m - r, 1), (m - 1 - r, 1), (m - 2 - r, n),
        ]
    alpha += [(3, 2), (3, 1), (2, n)]
    alpha += [(3, j) for j in range(n, 3, -1)]
    return _torus_report(m, n, "T9odd", EXACT, t * n + 1, seed, alpha)


# ---------------------------------------------------------------------------
# Dispatcher and fallback
# ---------------------------------------------------------------------------

def _fallback_seed_ids(m: int, n: int) -> set[int]:
    """Verified fallback layouts for the parameter pairs no case covers.

    For n = 3q+2 the vertex ids trace the column-order Hamiltonian cycle, and
    a traveling wave works: first row seeded in two of three residue classes,
    middle rows every third id, second-to-last row in the other two classes,
    last row empty.  For m = 4 (remaining n) rows 1 and 3 are seeded whole:
    rows 2 and 4 sit between two fully active rows and self-activate.
    """
    if n % 3 == 2 and m >= 4:
        ids = {k for k in range(n) if k % 3 != 2}
        ids.update(k for k in range(n, (m - 2) * n) if k % 3 == 1)
        ids.update(k for k in range((m - 2) * n, (m - 1) * n) if k % 3 != 0)
        ids.add((m - 1) * n - 1)  # hand the wave across the last-row boundary
        return ids
    if m == 4:
        return {torus_vertex_id(m, n, i, j) for i in (1, 3) for j in _irange(1, n)}
    raise BadParam(f"no fallback layout for ({m},{n})")


def _fallback_report(m: int, n: int) -> SeedReport:
    g = torus_cordalis(m, n)
    theta = constant_threshold(g, 3)
    seed = frozenset(_fallback_seed_ids(m, n))
    budget = flocchini_upper(m, n, "cordalis")
    if len(seed) > budget:
        raise ConstructionFailedVerification(
            f"fallback ({m},{n}): {len(seed)} seeds exceed the {budget} budget"
        )
    if not is_influencing(g, theta, seed):
        raise ConstructionFailedVerification(f"fallback ({m},{n}): seed does not influence")
    alpha = tuple(extract_convinced_sequence(g, theta, seed))
    return SeedReport(
        family="torus_cordalis",
        params={"m": m, "n": n},
        seed=seed,
        size=len(seed),
        theorem_case="fallback",
        claimed_value_kind=UPPER,
        lower_bound=tss_lower_bound_torus(m, n),
        convinced_sequence=alpha,
        verified=True,
    )


def seed_torus_cordalis(m: int, n: int) -> SeedReport:
    """Best applicable construction for the m x n torus cordalis.

    Exact cases are preferred (n=3; m divisible by 3; the n=3s exact cases),
    then the gap-one case, then the upper-bound families, then the verified
    fallback.
    """
    if m < 3 or n < 2:
        raise BadParam("torus cordalis needs m >= 3 and n >= 2")
    if n == 3:
        return seed_cordalis_n3(m)
    if m % 3 == 0:
        return seed_cordalis_m0mod3(m, n)
    if n % 3 == 0 and (m % 2 == 1 and m >= 5 or m % 2 == 0 and m >= 8):
        return seed_cordalis_n3s(m, n // 3)
    if n % 3 == 1 and (m % 2 == 1 and m >= 5 or m % 2 == 0 and m >= 8):
        return seed_cordalis_n1mod3(m, n)
    if n % 3 == 2 and n >= 5 and m >= 10:
        return seed_cordalis_n2mod3(m, n)
    return _fallback_report(m, n)
