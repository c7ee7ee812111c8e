"""Exact minimum-seed search on small instances by size-ascending enumeration.

Monotonicity of the closure makes the search sound: if a seed fails, every
subset of it fails, so the first size with any influencing seed is the
optimum. Candidate feasibility is one bitmask closure computation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .bounds import lower_bound_lemma
from .errors import BadParam, TooLarge
from .graph import Graph, is_connected
from .thresholds import ThresholdAssignment, check_thresholds

Thresholds = ThresholdAssignment | Sequence[int]


@dataclass(frozen=True)
class SolveLimits:
    max_vertices: int = 24
    time_budget_s: float | None = None
    max_size: int | None = None


@dataclass(frozen=True)
class SolveResult:
    optimum: int | None
    witness: frozenset[int] | None
    nodes_explored: int
    status: str  # "optimal" | "budget_exceeded"


@dataclass(frozen=True)
class OptimalityCheck:
    status: str  # "confirmed" | "refuted" | "inconclusive"
    witness: frozenset[int] | None = None
    reason: str | None = None
    nodes_explored: int = 0


def _spreads_to_all(masks: Sequence[int], theta: Sequence[int], seed_mask: int, full_mask: int, n: int) -> bool:
    active = seed_mask
    remaining = [v for v in range(n) if not (seed_mask >> v) & 1]
    while True:
        newly = 0
        keep = []
        for v in remaining:
            if (masks[v] & active).bit_count() >= theta[v]:
                newly |= 1 << v
            else:
                keep.append(v)
        if not newly:
            return active == full_mask
        active |= newly
        if active == full_mask:
            return True
        remaining = keep


def _prepare(g: Graph, theta: Thresholds, limits: SolveLimits):
    th = check_thresholds(g, theta)
    if g.vertex_count > limits.max_vertices:
        raise TooLarge(
            f"{g.vertex_count} vertices exceeds the limit of {limits.max_vertices}"
        )
    if g.vertex_count == 0 or not is_connected(g):
        raise BadParam("solver requires a connected non-empty graph")
    forced = tuple(v for v in g.vertices() if th[v] > g.degree(v))
    return th, forced


def _search_size(
    g: Graph,
    th: Sequence[int],
    forced: Sequence[int],
    k: int,
    deadline: float | None,
    counter: list[int],
) -> frozenset[int] | None:
    """Lexicographically first influencing seed of size k, or None.

    Candidates are forced-vertices plus k-|forced| others; merging a fixed
    sorted set into lexicographically ordered combinations preserves the lex
    order of the merged tuples.
    """
    if k < len(forced):
        return None
    masks = g.neighbor_masks
    n = g.vertex_count
    full = g.full_mask
    forced_mask = 0
    for v in forced:
        forced_mask |= 1 << v
    rest = [v for v in range(n) if not (forced_mask >> v) & 1]
    for combo in combinations(rest, k - len(forced)):
        counter[0] += 1
        if deadline is not None and counter[0] % 1024 == 0 and time.monotonic() > deadline:
            raise TimeoutError
        seed_mask = forced_mask
        for v in combo:
            seed_mask |= 1 << v
        if _spreads_to_all(masks, th, seed_mask, full, n):
            return frozenset(forced) | frozenset(combo)
    return None


def exact_min_seed(g: Graph, theta: Thresholds, limits: SolveLimits = SolveLimits()) -> SolveResult:
    """Smallest influencing seed, with a deterministic lex-least witness."""
    th, forced = _prepare(g, theta, limits)
    deadline = None
    if limits.time_budget_s is not None:
        deadline = time.monotonic() + limits.time_budget_s
    floor = len(forced)
    if all(t == th[0] for t in th) and th[0] >= 1:
        floor = max(floor, lower_bound_lemma(g, th[0]))
    top = g.vertex_count if limits.max_size is None else min(limits.max_size, g.vertex_count)
    counter = [0]
    for k in range(floor, top + 1):
        try:
            witness = _search_size(g, th, forced, k, deadline, counter)
        except TimeoutError:
            return SolveResult(None, None, counter[0], "budget_exceeded")
        if witness is not None:
            return SolveResult(k, witness, counter[0], "optimal")
    return SolveResult(None, None, counter[0], "budget_exceeded")


def verify_optimality(
    g: Graph,
    theta: Thresholds,
    claimed: int,
    limits: SolveLimits = SolveLimits(),
) -> OptimalityCheck:
    """Check a claimed optimum: confirmed, refuted with a smaller witness, or
    inconclusive (budget ran out, or no seed of the claimed size works)."""
    if claimed < 0:
        raise BadParam("claimed optimum must be non-negative")
    th, forced = _prepare(g, theta, limits)
    deadline = None
    if limits.time_budget_s is not None:
        deadline = time.monotonic() + limits.time_budget_s
    counter = [0]
    try:
        if claimed > 0:
            smaller = _search_size(g, th, forced, claimed - 1, deadline, counter)
            if smaller is not None:
                return OptimalityCheck("refuted", witness=smaller, nodes_explored=counter[0])
        at_claim = _search_size(g, th, forced, claimed, deadline, counter)
    except TimeoutError:
        return OptimalityCheck(
            "inconclusive", reason="time budget exceeded", nodes_explored=counter[0]
        )
    if at_claim is None:
        return OptimalityCheck(
            "inconclusive",
            reason=f"no influencing seed of size {claimed} exists; true optimum is larger",
            nodes_explored=counter[0],
        )
    return OptimalityCheck("confirmed", witness=at_claim, nodes_explored=counter[0])
