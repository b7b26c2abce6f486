"""Shared graph fixtures and independent reference computations for tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from lhcds import Graph


def clique_edges(vertices) -> list[tuple[int, int]]:
    return list(combinations(vertices, 2))


def k_n(n: int) -> Graph:
    return Graph.from_edges(n, clique_edges(range(n)))


def path_n(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def triangle() -> Graph:
    return k_n(3)


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def two_k4_bridge_vertex() -> Graph:
    """Two K4s {0..3} and {5..8} joined through the bridge vertex 4."""
    edges = clique_edges(range(4)) + clique_edges(range(5, 9)) + [(3, 4), (4, 5)]
    return Graph.from_edges(9, edges)


def two_k4_bridge_edge() -> Graph:
    """Two K4s {0..3} and {4..7} joined by the single edge (3, 4)."""
    edges = clique_edges(range(4)) + clique_edges(range(4, 8)) + [(3, 4)]
    return Graph.from_edges(8, edges)


def k4_pendant() -> Graph:
    """K4 {0..3} plus the degree-one vertex 4 hanging off 0."""
    return Graph.from_edges(5, clique_edges(range(4)) + [(0, 4)])


def k5_k4_bridge_edge() -> Graph:
    """K5 {0..4} and K4 {5..8} joined by the edge (4, 5)."""
    edges = clique_edges(range(5)) + clique_edges(range(5, 9)) + [(4, 5)]
    return Graph.from_edges(9, edges)


def thirteen_triangles() -> Graph:
    """K6 minus the two adjacent edges (0,1) and (0,2): 13 triangles, and the
    whole graph is its own densest subgraph at 13/6."""
    edges = clique_edges(range(6))
    edges.remove((0, 1))
    edges.remove((0, 2))
    return Graph.from_edges(6, edges)


def gnp(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def suite_graphs(seed: int = 20260810, count: int = 200):
    """The acceptance suite's random graphs: n in [4,10], p in {.3,.5,.7}."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(4, 10)
        p = rng.choice([0.3, 0.5, 0.7])
        out.append(gnp(rng, n, p))
    return out


def lds_bruteforce(g: Graph) -> list[tuple[tuple[int, ...], Fraction]]:
    """Independent locally-densest-subgraph brute force for edge density.

    Coded apart from the library oracle on purpose: edges are counted
    directly from the adjacency with a per-mask recurrence, not through any
    clique list. Returns (vertices, density) pairs sorted densest first;
    edge-free sets are excluded.
    """
    n = g.n
    adj_mask = [0] * n
    for v in range(n):
        for w in g.adj[v]:
            adj_mask[v] |= 1 << w

    size = 1 << n
    edge_count = [0] * size
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        edge_count[mask] = edge_count[rest] + bin(adj_mask[v] & rest).count("1")

    def connected(mask: int) -> bool:
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= adj_mask[b.bit_length() - 1]
            frontier = nxt & mask & ~seen
            seen |= frontier
        return seen == mask

    conn = [False] * size
    compact: dict[int, Fraction] = {}
    for mask in range(1, size):
        if not connected(mask):
            continue
        conn[mask] = True
        total = edge_count[mask]
        bits = bin(mask).count("1")
        best = None
        sub = (mask - 1) & mask
        while True:
            lost = total - edge_count[sub]
            removed = bits - bin(sub).count("1")
            val = Fraction(lost, removed)
            if best is None or val < best:
                best = val
            if sub == 0:
                break
            sub = (sub - 1) & mask
        compact[mask] = best

    full = size - 1
    results = []
    for mask in range(1, size):
        if not conn[mask] or edge_count[mask] == 0:
            continue
        density = Fraction(edge_count[mask], bin(mask).count("1"))
        if compact[mask] != density:
            continue
        rest = full & ~mask
        sup = rest
        maximal = True
        while sup and maximal:
            cand = mask | sup
            if conn[cand] and compact[cand] >= density:
                maximal = False
            sup = (sup - 1) & rest
        if maximal:
            vs = tuple(v for v in range(n) if mask >> v & 1)
            results.append((vs, density))
    results.sort(key=lambda item: (-item[1], item[0]))
    return results
