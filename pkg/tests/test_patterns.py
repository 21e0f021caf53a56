"""Pattern graph catalogue, containment, and isomorphism."""

import random
from itertools import combinations

import pytest

from degseq.core import DegreeSequence, havel_hakimi_realize
from degseq.patterns import (
    PatternId,
    SmallGraph,
    complement,
    contains_subgraph,
    find_embedding,
    is_isomorphic,
    pattern_graph,
)

K5 = SmallGraph(5, tuple(combinations(range(5), 2)))


def test_small_graph_basics():
    g = SmallGraph(3, [(0, 1), (1, 2), (0, 1)])  # duplicate edge collapses
    assert g.edge_count == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert g.degrees() == (1, 2, 1)
    assert g.degree(1) == 2
    assert g.edges == ((0, 1), (1, 2))
    assert g.edge_text() == "0-1\n1-2"
    with pytest.raises(ValueError):
        SmallGraph(3, [(0, 0)])
    with pytest.raises(ValueError):
        SmallGraph(3, [(0, 3)])
    with pytest.raises(ValueError):
        SmallGraph(17, [])


def test_pattern_tokens_round_trip():
    for pid in PatternId:
        assert PatternId.from_token(pid.token) is pid
    with pytest.raises(ValueError):
        PatternId.from_token("k6-p3")


@pytest.mark.parametrize(
    "pid, edges, degrees",
    [
        (PatternId.K5_P3, 7, (4, 3, 3, 2, 2)),
        (PatternId.K5_A3, 7, (3, 3, 3, 3, 2)),
        (PatternId.K5_K3, 7, (4, 4, 2, 2, 2)),
        (PatternId.K5_K13, 7, (4, 3, 3, 3, 1)),
        (PatternId.K5_2K2, 8, (4, 3, 3, 3, 3)),
        (PatternId.K5_C4, 6, (4, 2, 2, 2, 2)),
        (PatternId.K5_E, 9, (4, 4, 4, 3, 3)),
        (PatternId.C4, 4, (2, 2, 2, 2)),
        (PatternId.C5, 5, (2, 2, 2, 2, 2)),
        (PatternId.K122, 8, (4, 3, 3, 3, 3)),
        (PatternId.K311, 7, (4, 4, 2, 2, 2)),
    ],
)
def test_pattern_graph_catalogue(pid, edges, degrees):
    g = pattern_graph(pid)
    assert g.edge_count == edges
    assert g.degree_sequence().terms == degrees


def test_contains_subgraph_examples():
    assert contains_subgraph(K5, pattern_graph(PatternId.K5_P3))
    c5 = pattern_graph(PatternId.C5)
    assert contains_subgraph(c5, c5)
    k222 = havel_hakimi_realize(DegreeSequence([4] * 6))
    assert contains_subgraph(k222, pattern_graph(PatternId.K122))
    assert not contains_subgraph(c5, pattern_graph(PatternId.C4))
    with pytest.raises(ValueError):
        contains_subgraph(pattern_graph(PatternId.C4), c5)


def test_k5_contains_every_pattern():
    for pid in PatternId:
        h = pattern_graph(pid)
        if h.n == 5:
            assert contains_subgraph(K5, h), pid


def test_containment_chains():
    k5e = pattern_graph(PatternId.K5_E)
    assert contains_subgraph(k5e, pattern_graph(PatternId.K5_P3))
    assert contains_subgraph(pattern_graph(PatternId.K122), pattern_graph(PatternId.K5_P3))
    assert contains_subgraph(k5e, pattern_graph(PatternId.K5_2K2))


def test_containment_is_monotone_under_edge_addition():
    rng = random.Random(7)
    patterns = [pattern_graph(p) for p in PatternId if pattern_graph(p).n == 5]
    for _ in range(60):
        n = rng.randint(5, 8)
        pairs = list(combinations(range(n), 2))
        edges = [p for p in pairs if rng.random() < 0.5]
        g = SmallGraph(n, edges)
        missing = [p for p in pairs if p not in set(edges)]
        if not missing:
            continue
        g_plus = SmallGraph(n, edges + [rng.choice(missing)])
        for h in patterns:
            if contains_subgraph(g, h):
                assert contains_subgraph(g_plus, h)


def test_find_embedding_maps_edges_to_edges():
    g = havel_hakimi_realize(DegreeSequence([4] * 6))
    h = pattern_graph(PatternId.K122)
    phi = find_embedding(g, h)
    assert phi is not None
    assert len(set(phi)) == h.n
    for u, v in h.edges:
        assert g.has_edge(phi[u], phi[v])
    assert find_embedding(pattern_graph(PatternId.C5), pattern_graph(PatternId.C4)) is None


def test_complement_examples():
    assert is_isomorphic(complement(pattern_graph(PatternId.C5)), pattern_graph(PatternId.C5))
    assert complement(K5).edge_count == 0
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 8)
        pairs = [p for p in combinations(range(n), 2) if rng.random() < 0.5]
        g = SmallGraph(n, pairs)
        assert complement(complement(g)) == g


def test_is_isomorphic_examples():
    assert is_isomorphic(pattern_graph(PatternId.K122), pattern_graph(PatternId.K5_2K2))
    assert is_isomorphic(pattern_graph(PatternId.K311), pattern_graph(PatternId.K5_K3))
    c4_plus_isolated = SmallGraph(5, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert not is_isomorphic(pattern_graph(PatternId.C5), c4_plus_isolated)
    with pytest.raises(ValueError):
        is_isomorphic(pattern_graph(PatternId.C4), pattern_graph(PatternId.C5))


def test_is_isomorphic_catches_degree_preserving_non_isomorphism():
    # C6 and two triangles share the degree sequence (2^6) but differ
    c6 = SmallGraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    two_triangles = SmallGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(c6, two_triangles)
    assert is_isomorphic(c6, SmallGraph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 1)]))
