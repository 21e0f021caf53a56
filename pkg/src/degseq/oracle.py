"""Ground-truth searches over labeled realizations of a degree sequence.

Two independent deciders for "some realization contains the pattern": an
unrestricted search over all realizations, and a faster search that only
builds realizations carrying the pattern on the highest-degree positions.
Restricting to those positions loses nothing, because a realization
containing the pattern can always be rearranged so the pattern occupies the
largest-degree vertices; placement_agrees exists to validate exactly that.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable

from degseq.core import (
    DegreeSequence,
    NonGraphicError,
    ZeroTermsError,
    _graphic_sorted,
)
from degseq.patterns import PatternId, SmallGraph, contains_subgraph, pattern_graph

__all__ = [
    "DEFAULT_MAX_NODES",
    "MAX_SEARCH_VERTICES",
    "BudgetExhaustedError",
    "SearchBudget",
    "SearchOutcome",
    "enumerate_realizations",
    "find_witness",
    "placement_agrees",
    "potentially_oracle",
]

DEFAULT_MAX_NODES = 50_000_000
MAX_SEARCH_VERTICES = 12


@dataclass(frozen=True)
class SearchBudget:
    """Bounds on one search. Exhaustion is a distinct outcome, never a verdict."""

    max_nodes: int = DEFAULT_MAX_NODES
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise ValueError(f"max_nodes must be positive, got {self.max_nodes}")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError(f"time_limit must be positive, got {self.time_limit}")


class BudgetExhaustedError(RuntimeError):
    """The search hit its node or time budget before reaching a verdict."""

    def __init__(self, nodes: int) -> None:
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


class SearchOutcome(Enum):
    COMPLETE = "complete"
    STOPPED = "stopped"


class _Meter:
    """Node counter enforcing a SearchBudget across one or more searches."""

    __slots__ = ("nodes", "max_nodes", "deadline")

    def __init__(self, budget: SearchBudget) -> None:
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = (
            None if budget.time_limit is None else time.monotonic() + budget.time_limit
        )

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExhaustedError(self.nodes)
        if (
            self.deadline is not None
            and not self.nodes & 0xFFF
            and time.monotonic() > self.deadline
        ):
            raise BudgetExhaustedError(self.nodes)


def _require_search_input(seq: DegreeSequence, need_positive: bool) -> None:
    if seq.n > MAX_SEARCH_VERTICES:
        raise ValueError(
            f"realization search supports at most {MAX_SEARCH_VERTICES} vertices, got {seq.n}"
        )
    if need_positive and not seq.positive:
        raise ZeroTermsError(f"{seq} contains zero terms; potentially-H tests need positive terms")
    if not _graphic_sorted(seq.terms):
        raise NonGraphicError(f"{seq} is not graphic")


def enumerate_realizations(
    seq: DegreeSequence,
    visit: Callable[[SmallGraph], object],
    budget: SearchBudget | None = None,
) -> SearchOutcome:
    """Visit every labeled realization (vertex i has degree terms[i]) exactly once.

    The adjacency matrix is decided row by row; a row's candidate neighbours
    are ordered by descending residual demand, and a branch is pruned when the
    residual demand of the undecided rows is not graphic. The visit callback
    may return False to stop the enumeration; any other return continues.

    Returns SearchOutcome.COMPLETE or STOPPED; raises NonGraphicError,
    ValueError (n > 12), or BudgetExhaustedError.
    """
    _require_search_input(seq, need_positive=False)
    n = seq.n
    meter = _Meter(budget if budget is not None else SearchBudget())
    adj = [0] * n
    res = list(seq.terms)

    def extend(v: int) -> bool:
        if v == n:
            return visit(SmallGraph._from_adj(n, tuple(adj))) is not False
        r = res[v]
        cands = sorted(
            (u for u in range(v + 1, n) if res[u] > 0),
            key=lambda u: (-res[u], u),
        )
        if len(cands) < r:
            return True
        for chosen in combinations(cands, r):
            meter.tick()
            adj_v = adj[v]
            for u in chosen:
                adj[v] |= 1 << u
                adj[u] |= 1 << v
                res[u] -= 1
            res[v] = 0
            keep_going = True
            if _graphic_sorted(tuple(sorted(res[v + 1 :], reverse=True))):
                keep_going = extend(v + 1)
            adj[v] = adj_v
            for u in chosen:
                adj[u] ^= 1 << v
                res[u] += 1
            res[v] = r
            if not keep_going:
                return False
        return True

    completed = extend(0)
    return SearchOutcome.COMPLETE if completed else SearchOutcome.STOPPED


@lru_cache(maxsize=None)
def _placements(pg: SmallGraph) -> tuple[tuple[int, ...], ...]:
    """Distinct per-position adjacency masks for the pattern on positions 0..p-1.

    One entry per distinct edge set, i.e. p!/|Aut(pattern)| placements, in a
    fixed sorted order.
    """
    p = pg.n
    edges = pg.edges
    seen: set[tuple[int, ...]] = set()
    for perm in permutations(range(p)):
        masks = [0] * p
        for u, v in edges:
            a, b = perm[u], perm[v]
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        seen.add(tuple(masks))
    return tuple(sorted(seen))


def _pattern_degrees(pg: SmallGraph) -> tuple[int, ...]:
    return tuple(sorted((a.bit_count() for a in pg.adj), reverse=True))


def _degrees_admit(terms: tuple[int, ...], pg: SmallGraph) -> bool:
    """Necessary counting bound: the top degrees must dominate the pattern's.

    Any embedding needs p host vertices whose sorted degrees dominate the
    pattern's sorted degrees, and the top-p host degrees dominate every
    p-subset's.
    """
    if len(terms) < pg.n:
        return False
    pdeg = _pattern_degrees(pg)
    return all(terms[i] >= pdeg[i] for i in range(pg.n))


def _complete_placement(
    terms: tuple[int, ...], masks: tuple[int, ...], meter: _Meter
) -> tuple[int, ...] | None:
    """Extend forced pattern edges on positions 0..p-1 to a full realization.

    Returns the adjacency masks of the first realization found by the fixed
    search order, or None when none exists.
    """
    n = len(terms)
    p = len(masks)
    adj = list(masks) + [0] * (n - p)
    res = [terms[i] - adj[i].bit_count() for i in range(n)]

    def extend(v: int) -> tuple[int, ...] | None:
        if v == n:
            return tuple(adj)
        r = res[v]
        forced = adj[v]
        cands = sorted(
            (u for u in range(v + 1, n) if res[u] > 0 and not forced >> u & 1),
            key=lambda u: (-res[u], u),
        )
        if len(cands) < r:
            return None
        for chosen in combinations(cands, r):
            meter.tick()
            adj_v = adj[v]
            for u in chosen:
                adj[v] |= 1 << u
                adj[u] |= 1 << v
                res[u] -= 1
            res[v] = 0
            if _graphic_sorted(tuple(sorted(res[v + 1 :], reverse=True))):
                found = extend(v + 1)
                if found is not None:
                    return found
            adj[v] = adj_v
            for u in chosen:
                adj[u] ^= 1 << v
                res[u] += 1
            res[v] = r
        return None

    return extend(0)


def _restricted_witness(
    terms: tuple[int, ...], pg: SmallGraph, meter: _Meter
) -> SmallGraph | None:
    """Search only realizations carrying the pattern on the top-degree positions."""
    if not _degrees_admit(terms, pg):
        return None
    p = pg.n
    for masks in _placements(pg):
        if any(masks[i].bit_count() > terms[i] for i in range(p)):
            continue
        full = _complete_placement(terms, masks, meter)
        if full is not None:
            return SmallGraph._from_adj(len(terms), full)
    return None


def _unrestricted_potentially(
    terms: tuple[int, ...], pg: SmallGraph, meter: _Meter
) -> bool:
    """Decide containment over all realizations, no placement assumption.

    Containment is tested once all rows that could host the whole pattern are
    decided (depth p), and again at leaves; the depth-p test may accept early
    because adding edges never removes a pattern copy.
    """
    if not _degrees_admit(terms, pg):
        return False
    n = len(terms)
    p = pg.n
    adj = [0] * n
    res = list(terms)

    def extend(v: int) -> bool:
        if v == n:
            return contains_subgraph(SmallGraph._from_adj(n, tuple(adj)), pg)
        if v == p and contains_subgraph(SmallGraph._from_adj(n, tuple(adj)), pg):
            return True
        r = res[v]
        cands = sorted(
            (u for u in range(v + 1, n) if res[u] > 0),
            key=lambda u: (-res[u], u),
        )
        if len(cands) < r:
            return False
        for chosen in combinations(cands, r):
            meter.tick()
            adj_v = adj[v]
            for u in chosen:
                adj[v] |= 1 << u
                adj[u] |= 1 << v
                res[u] -= 1
            res[v] = 0
            if _graphic_sorted(tuple(sorted(res[v + 1 :], reverse=True))) and extend(v + 1):
                return True
            adj[v] = adj_v
            for u in chosen:
                adj[u] ^= 1 << v
                res[u] += 1
            res[v] = r
        return False

    return extend(0)


@lru_cache(maxsize=None)
def _potentially_default_budget(terms: tuple[int, ...], pg: SmallGraph) -> bool:
    return _restricted_witness(terms, pg, _Meter(SearchBudget())) is not None


def potentially_oracle(
    seq: DegreeSequence, pattern: PatternId, budget: SearchBudget | None = None
) -> bool:
    """True iff some realization of seq contains the pattern.

    Decided by search, independent of the characterization theorems. Results
    under the default budget are cached per (sequence, pattern graph).
    Raises NonGraphicError, ZeroTermsError, ValueError (n > 12), or
    BudgetExhaustedError.
    """
    _require_search_input(seq, need_positive=True)
    pg = pattern_graph(pattern)
    if budget is None:
        return _potentially_default_budget(seq.terms, pg)
    return _restricted_witness(seq.terms, pg, _Meter(budget)) is not None


def find_witness(
    seq: DegreeSequence, pattern: PatternId, budget: SearchBudget | None = None
) -> SmallGraph | None:
    """Concrete realization containing the pattern, or None.

    The pattern copy sits on the highest-degree positions. Output is
    deterministic: placements are tried in sorted mask order, rows top-down,
    candidate neighbours by descending residual demand.
    """
    _require_search_input(seq, need_positive=True)
    pg = pattern_graph(pattern)
    return _restricted_witness(seq.terms, pg, _Meter(budget if budget is not None else SearchBudget()))


def placement_agrees(
    seq: DegreeSequence, pattern: PatternId, budget: SearchBudget | None = None
) -> bool:
    """Do the placement-restricted and unrestricted searches agree on seq?

    Test-only validation of the top-degree placement restriction (n <= 10; the
    two searches share one budget).
    """
    _require_search_input(seq, need_positive=True)
    if seq.n > 10:
        raise ValueError(f"placement_agrees supports at most 10 vertices, got {seq.n}")
    pg = pattern_graph(pattern)
    meter = _Meter(budget if budget is not None else SearchBudget())
    restricted = _restricted_witness(seq.terms, pg, meter) is not None
    unrestricted = _unrestricted_potentially(seq.terms, pg, meter)
    return restricted == unrestricted
