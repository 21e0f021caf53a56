"""Small labeled graphs, the K5-minus-H pattern catalogue, and containment tests."""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

from degseq.core import DegreeSequence

__all__ = [
    "PatternId",
    "SmallGraph",
    "complement",
    "contains_subgraph",
    "find_embedding",
    "is_isomorphic",
    "pattern_graph",
]

MAX_VERTICES = 16


class PatternId(Enum):
    """Identifiers for the target graphs used throughout the package."""

    K5_P3 = "k5-p3"
    K5_A3 = "k5-a3"
    K5_K3 = "k5-k3"
    K5_K13 = "k5-k13"
    K5_2K2 = "k5-2k2"
    C4 = "c4"
    C5 = "c5"
    K5_C4 = "k5-c4"
    K5_E = "k5-e"
    K122 = "k122"
    K311 = "k311"

    @property
    def token(self) -> str:
        return self.value

    @classmethod
    def from_token(cls, token: str) -> "PatternId":
        for member in cls:
            if member.value == token:
                return member
        raise ValueError(f"unknown pattern token {token!r}")


class SmallGraph:
    """Immutable simple graph on at most 16 vertices.

    Adjacency is stored as one bitmask per vertex, so neighbourhood tests and
    degree counts are single-word operations. Duplicate edges collapse.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be between 0 and {MAX_VERTICES}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n: int = n
        self.adj: tuple[int, ...] = tuple(adj)

    @classmethod
    def _from_adj(cls, n: int, adj: tuple[int, ...]) -> "SmallGraph":
        """Unvalidated constructor for search leaves; callers guarantee symmetry."""
        out = object.__new__(cls)
        out.n = n
        out.adj = adj
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        """Per-label degrees, index i giving degree of vertex i."""
        return tuple(a.bit_count() for a in self.adj)

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(self.degrees())

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.adj[u] >> v & 1
        )

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edge_text(self) -> str:
        """One "u-v" line per edge, u < v, ordered by the (u, v) pair."""
        return "\n".join(f"{u}-{v}" for u, v in self.edges)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SmallGraph):
            return self.n == other.n and self.adj == other.adj
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.edges)

    def __repr__(self) -> str:
        return f"SmallGraph(n={self.n}, edges={list(self.edges)!r})"


def _k5_minus(removed: tuple[tuple[int, int], ...]) -> SmallGraph:
    gone = set(removed)
    edges = [
        (u, v)
        for u in range(5)
        for v in range(u + 1, 5)
        if (u, v) not in gone
    ]
    return SmallGraph(5, edges)


def _cycle(n: int) -> SmallGraph:
    return SmallGraph(n, [(i, (i + 1) % n) for i in range(n)])


_K5_REMOVALS: dict[PatternId, tuple[tuple[int, int], ...]] = {
    PatternId.K5_P3: ((0, 1), (1, 2), (2, 3)),
    PatternId.K5_A3: ((0, 1), (1, 2), (3, 4)),
    PatternId.K5_K3: ((0, 1), (0, 2), (1, 2)),
    PatternId.K5_K13: ((0, 1), (0, 2), (0, 3)),
    PatternId.K5_2K2: ((0, 1), (2, 3)),
    PatternId.K5_C4: ((0, 1), (1, 2), (2, 3), (0, 3)),
    PatternId.K5_E: ((0, 1),),
    # Complete tripartite forms: parts {0},{1,2},{3,4} and {0,1,2},{3},{4}.
    PatternId.K122: ((1, 2), (3, 4)),
    PatternId.K311: ((0, 1), (0, 2), (1, 2)),
}


@lru_cache(maxsize=None)
def pattern_graph(pattern: PatternId) -> SmallGraph:
    """Canonical labeled graph for a pattern identifier."""
    if pattern is PatternId.C4:
        return _cycle(4)
    if pattern is PatternId.C5:
        return _cycle(5)
    return _k5_minus(_K5_REMOVALS[pattern])


@lru_cache(maxsize=None)
def _embedding_plan(
    h_n: int, h_adj: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Vertex order (descending degree), per-slot degree, earlier-neighbour slots."""
    order = sorted(range(h_n), key=lambda v: (-h_adj[v].bit_count(), v))
    slot_of = {v: i for i, v in enumerate(order)}
    need = tuple(h_adj[v].bit_count() for v in order)
    earlier = tuple(
        tuple(slot_of[u] for u in range(h_n) if h_adj[v] >> u & 1 and slot_of[u] < i)
        for i, v in enumerate(order)
    )
    return tuple(order), need, earlier


def find_embedding(g: SmallGraph, h: SmallGraph) -> tuple[int, ...] | None:
    """Injective edge-preserving map of h into g, or None.

    The result tuple is indexed by h's vertex labels. Containment is
    non-induced: edges of h must map to edges of g, non-edges are free.
    """
    if h.n > g.n:
        raise ValueError(f"pattern on {h.n} vertices cannot embed in host on {g.n}")
    order, need, earlier = _embedding_plan(h.n, h.adj)
    gdeg = [a.bit_count() for a in g.adj]
    cand = [
        tuple(w for w in range(g.n) if gdeg[w] >= need[i])
        for i in range(h.n)
    ]
    assign = [0] * h.n
    gadj = g.adj

    def extend(i: int, used: int) -> bool:
        if i == h.n:
            return True
        for w in cand[i]:
            if used >> w & 1:
                continue
            ok = True
            for j in earlier[i]:
                if not gadj[w] >> assign[j] & 1:
                    ok = False
                    break
            if ok:
                assign[i] = w
                if extend(i + 1, used | 1 << w):
                    return True
        return False

    if not extend(0, 0):
        return None
    phi = [0] * h.n
    for i, v in enumerate(order):
        phi[v] = assign[i]
    return tuple(phi)


def contains_subgraph(g: SmallGraph, h: SmallGraph) -> bool:
    """True iff g contains a (not necessarily induced) copy of h."""
    return find_embedding(g, h) is not None


def complement(g: SmallGraph) -> SmallGraph:
    """Edge present iff absent in g; never introduces loops."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.adj[u] >> v & 1
    ]
    return SmallGraph(g.n, edges)


def is_isomorphic(g: SmallGraph, h: SmallGraph) -> bool:
    """Degree-refined search for an edge-preserving bijection (n <= 10)."""
    if g.n != h.n:
        raise ValueError(f"vertex counts differ: {g.n} != {h.n}")
    if g.n > 10:
        raise ValueError(f"isomorphism search supports at most 10 vertices, got {g.n}")
    if g.edge_count != h.edge_count:
        return False
    if sorted(a.bit_count() for a in g.adj) != sorted(a.bit_count() for a in h.adj):
        return False
    order, need, earlier = _embedding_plan(h.n, h.adj)
    gdeg = [a.bit_count() for a in g.adj]
    cand = [
        tuple(w for w in range(g.n) if gdeg[w] == need[i])
        for i in range(h.n)
    ]
    gadj = g.adj
    assign = [0] * h.n

    def extend(i: int, used: int) -> bool:
        if i == h.n:
            return True
        for w in cand[i]:
            if used >> w & 1:
                continue
            ok = True
            for j in earlier[i]:
                if not gadj[w] >> assign[j] & 1:
                    ok = False
                    break
            if ok:
                assign[i] = w
                if extend(i + 1, used | 1 << w):
                    return True
        return False

    # A bijection carrying all |E(h)| edges onto the equal-sized edge set of g
    # is automatically an isomorphism.
    return extend(0, 0)


def _startup_identities() -> None:
    assert is_isomorphic(pattern_graph(PatternId.K122), pattern_graph(PatternId.K5_2K2))
    assert is_isomorphic(pattern_graph(PatternId.K311), pattern_graph(PatternId.K5_K3))


_startup_identities()
