"""Threshold activation dynamics: parallel closure, traces, sequential runs.

A vertex v activates once at least theta(v) of its neighbors are active;
active vertices never deactivate, so the final active set is the least fixed
point containing the seed and is independent of update order.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadParam, DuplicateVertex, SeedOverlap, VertexOutOfRange
from .graph import Graph
from .thresholds import ThresholdAssignment, check_thresholds

Thresholds = ThresholdAssignment | Sequence[int]


@dataclass(frozen=True)
class ActivationTrace:
    seed: frozenset[int]
    rounds: tuple[frozenset[int], ...]  # round t = vertices newly active at step t
    final: frozenset[int]

    def to_json(self) -> str:
        return json.dumps(
            {
                "seed": sorted(self.seed),
                "rounds": [sorted(r) for r in self.rounds],
                "final_size": len(self.final),
            }
        )


@dataclass(frozen=True)
class SequenceValidation:
    ok: bool
    full_influence: bool
    failing_position: int | None = None  # 1-based position of the first violation
    active_neighbors: int | None = None
    required: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _check_seed(g: Graph, seed: Iterable[int]) -> frozenset[int]:
    s = frozenset(seed)
    for v in s:
        if not 0 <= v < g.vertex_count:
            raise VertexOutOfRange(f"seed vertex {v} not in 0..{g.vertex_count - 1}")
    return s


def _run_rounds(g: Graph, theta: tuple[int, ...], seed: frozenset[int]):
    """Frontier engine with incremental active-neighbor counters."""
    adj = g.adjacency
    n = g.vertex_count
    active = bytearray(n)
    counts = [0] * n
    for v in seed:
        active[v] = 1
    rounds: list[frozenset[int]] = []
    # thresholds of 0 fire in the first round with no active neighbors
    current = sorted(seed)
    zero = [v for v in range(n) if theta[v] == 0 and not active[v]]
    while current or zero:
        touched = set(zero)
        for v in current:
            for w in adj[v]:
                counts[w] += 1
                if not active[w]:
                    touched.add(w)
        nxt = [w for w in sorted(touched) if not active[w] and counts[w] >= theta[w]]
        zero = []
        for w in nxt:
            active[w] = 1
        if nxt:
            rounds.append(frozenset(nxt))
        current = nxt
    final = frozenset(v for v in range(n) if active[v])
    return rounds, final


def closure(g: Graph, theta: Thresholds, seed: Iterable[int]) -> frozenset[int]:
    """Final active set of the parallel process started from `seed`."""
    th = check_thresholds(g, theta)
    s = _check_seed(g, seed)
    _, final = _run_rounds(g, th, s)
    return final


def parallel_trace(g: Graph, theta: Thresholds, seed: Iterable[int]) -> ActivationTrace:
    """Round-by-round record of the parallel process."""
    th = check_thresholds(g, theta)
    s = _check_seed(g, seed)
    rounds, final = _run_rounds(g, th, s)
    return ActivationTrace(s, tuple(rounds), final)


def is_influencing(g: Graph, theta: Thresholds, seed: Iterable[int]) -> bool:
    return len(closure(g, theta, seed)) == g.vertex_count


def sequential_closure(
    g: Graph,
    theta: Thresholds,
    seed: Iterable[int],
    order_policy: str = "lowest-id",
    rng_seed: int | None = None,
) -> frozenset[int]:
    """Run the one-vertex-at-a-time rule to exhaustion.

    The policy only picks which eligible vertex goes next ("lowest-id" or
    "random" with an explicit rng_seed); the final set always equals the
    parallel closure.
    """
    th = check_thresholds(g, theta)
    s = _check_seed(g, seed)
    if order_policy == "random":
        if rng_seed is None:
            raise BadParam("random order policy needs an explicit rng_seed")
        rng = random.Random(rng_seed)
    elif order_policy == "lowest-id":
        rng = None
    else:
        raise BadParam(f"unknown order policy {order_policy!r}")
    adj = g.adjacency
    n = g.vertex_count
    active = bytearray(n)
    counts = [0] * n
    for v in s:
        active[v] = 1
        for w in adj[v]:
            counts[w] += 1
    eligible = {
        v for v in range(n) if not active[v] and counts[v] >= th[v]
    }
    result = set(s)
    while eligible:
        if rng is None:
            v = min(eligible)
        else:
            v = rng.choice(sorted(eligible))
        eligible.discard(v)
        active[v] = 1
        result.add(v)
        for w in adj[v]:
            counts[w] += 1
            if not active[w] and counts[w] >= th[w]:
                eligible.add(w)
    return frozenset(result)


def validate_convinced_sequence(
    g: Graph,
    theta: Thresholds,
    seed: Iterable[int],
    order: Sequence[int],
) -> SequenceValidation:
    """Check that `order` is a legal sequential activation order from `seed`.

    Position p (1-based) is legal when order[p-1] has at least theta(v) active
    neighbors among seed plus the earlier entries. full_influence additionally
    requires seed plus the whole sequence to cover V(g).
    """
    th = check_thresholds(g, theta)
    s = _check_seed(g, seed)
    seen: set[int] = set()
    for v in order:
        if not 0 <= v < g.vertex_count:
            raise VertexOutOfRange(f"sequence vertex {v} not in 0..{g.vertex_count - 1}")
        if v in s:
            raise SeedOverlap(f"sequence vertex {v} is already in the seed")
        if v in seen:
            raise DuplicateVertex(f"sequence lists vertex {v} twice")
        seen.add(v)
    adj = g.adjacency
    active = set(s)
    for pos, v in enumerate(order, start=1):
        have = sum(1 for w in adj[v] if w in active)
        if have < th[v]:
            return SequenceValidation(
                ok=False,
                full_influence=False,
                failing_position=pos,
                active_neighbors=have,
                required=th[v],
            )
        active.add(v)
    return SequenceValidation(ok=True, full_influence=len(active) == g.vertex_count)


def extract_convinced_sequence(g: Graph, theta: Thresholds, seed: Iterable[int]) -> list[int]:
    """A valid convinced sequence covering everything the seed influences.

    Flattens the parallel trace round by round; vertices inside one round only
    depend on earlier rounds, so any within-round order is legal.
    """
    trace = parallel_trace(g, theta, seed)
    out: list[int] = []
    for r in trace.rounds:
        out.extend(sorted(r))
    return out
