"""Shared generators for the randomized (seeded) test corpora."""

import random

from galois_span.graphs import SerreGraph, build_graph
from galois_span.posets import Poset


def random_connected_graph(rng: random.Random, max_vertices=5, max_edges=9) -> SerreGraph:
    """Random spanning tree plus extra edges; loops and multi-edges allowed."""
    n = rng.randrange(1, max_vertices + 1)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    extra = rng.randrange(0, max_edges - len(edges) + 1)
    for _ in range(extra):
        edges.append((rng.randrange(n), rng.randrange(n)))
    return build_graph(n, edges)


def random_poset(rng: random.Random, max_elements=7) -> Poset:
    """Random DAG on a linear extension, transitively closed."""
    n = rng.randrange(1, max_elements + 1)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                leq[i][j] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    return Poset(list(range(n)), [str(i) for i in range(n)], leq)


def dumbbell_graph() -> SerreGraph:
    """Two vertices, a loop at each, and one bridge (chi = -1)."""
    return build_graph(2, [(0, 0), (0, 1), (1, 1)])


def theta_graph() -> SerreGraph:
    """Two vertices joined by three parallel edges (chi = -1)."""
    return build_graph(2, [(0, 1), (0, 1), (0, 1)])
