"""Removal of vertices that provably belong to no locally densest subgraph.

Two rules, applied to a copy of the working graph: a vertex v falls when an
edge (u, v) has lower[u] strictly above upper[v], and, after recomputing
clique cores on the survivor graph, when a vertex's core drops below its own
lower bound (repeated to a fixed point). Bound comparisons leave one float
ulp of slack toward keeping: a missed removal only costs time, a wrong one
breaks exactness.
"""

from __future__ import annotations

import math

from .cliques import Bounds, BoundValue, CliqueSet, clique_core_numbers, \
    enumerate_cliques, restrict_cliques
from .graph import Graph, VertexSet, induced_subgraph
from .proposal import CandidateGroup


def definitely_less(a: BoundValue, b: BoundValue) -> bool:
    """True when a < b by more than one float ulp (never fires on a tie)."""
    return float(a) < math.nextafter(float(b), -math.inf)


def prune(g: Graph, candidates: list[CandidateGroup], bounds: Bounds,
          h: int, cs: CliqueSet | None = None
          ) -> tuple[list[CandidateGroup], Graph, VertexSet]:
    """Drop provably invalid vertices out of g and out of every candidate.

    Returns the surviving candidates (empty ones removed), the pruned graph
    as an induced subgraph of g, and the sorted tuple of surviving vertex
    ids (in g's id space). Idempotent for unchanged bounds.
    """
    if cs is None:
        cs = enumerate_cliques(g, h)

    alive = [True] * g.n
    for v in range(g.n):
        uv = bounds.upper[v]
        for u in g.adj[v]:
            if definitely_less(uv, bounds.lower[u]):
                alive[v] = False
                break

    # cascade: recompute cores among survivors until no vertex sits below
    # its own lower bound
    while True:
        survivors = [v for v in range(g.n) if alive[v]]
        sub_cs = restrict_cliques(cs, survivors)
        sub_g = induced_subgraph(g, survivors)
        core = clique_core_numbers(sub_g, sub_cs)
        dropped = False
        for i, v in enumerate(survivors):
            if definitely_less(core[i], bounds.lower[v]):
                alive[v] = False
                dropped = True
        if not dropped:
            break

    surviving = tuple(v for v in range(g.n) if alive[v])
    kept: list[CandidateGroup] = []
    for cand in candidates:
        vs = tuple(v for v in cand.vertices if alive[v])
        if vs:
            kept.append(CandidateGroup(vertices=vs, load_min=cand.load_min,
                                       load_max=cand.load_max))
    return kept, induced_subgraph(g, surviving), surviving
