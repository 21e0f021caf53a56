"""Shared generators for exhaustive and brute-force cross-checks."""

from itertools import combinations, combinations_with_replacement

from degseq.patterns import SmallGraph


def nonincreasing_tuples(n, max_term, min_term=0):
    """Every non-increasing tuple of length n with values in [min_term, max_term]."""
    for combo in combinations_with_replacement(range(min_term, max_term + 1), n):
        yield tuple(reversed(combo))


def all_graphs(n):
    """Every labeled simple graph on n vertices, as a SmallGraph."""
    pairs = list(combinations(range(n), 2))
    for r in range(len(pairs) + 1):
        for chosen in combinations(pairs, r):
            yield SmallGraph(n, chosen)
