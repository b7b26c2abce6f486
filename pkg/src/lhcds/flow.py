"""Exact max-flow machinery for compact-subgraph derivation and verification.

Every capacity is an integer numerator over one shared denominator, so cuts
are exact and the 1/|V|^2 density separation argument survives; floating
point never touches the flow. The min cut is read off as the largest optimal
source side (vertices with no residual path to the sink), which is what the
"largest subgraph maximizing clique count minus rho times size" contract
requires; the residual-reachable-from-source set would give the smallest.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import IO, Sequence

from .cliques import Bounds, CliqueSet, restrict_cliques
from .graph import Graph, VertexSet, induced_subgraph


@dataclass
class BoundaryClique:
    """A clique straddling the working subgraph's border: its id in the host
    clique set, the number of its vertices inside (1 <= cnt <= h-1), and those
    inside vertices in the working graph's id space."""

    clique_id: int
    cnt: int
    inside: tuple[int, ...]


@dataclass
class FlowNetwork:
    """Directed network with integer capacities over a shared denominator.

    Node layout: 0 = source, 1 = sink, then one node per working-graph vertex
    (``vertex_node[v] = 2 + v``), then clique and boundary nodes. Arcs store
    remaining capacity; min_cut consumes the network.
    """

    num_vertices: int
    den: int
    arcs: list[list[list[int]]] = field(default_factory=list)  # [to, cap, rev]

    SOURCE = 0
    SINK = 1

    def __post_init__(self):
        if not self.arcs:
            self.arcs = [[] for _ in range(2 + self.num_vertices)]

    def vertex_node(self, v: int) -> int:
        return 2 + v

    def add_node(self) -> int:
        self.arcs.append([])
        return len(self.arcs) - 1

    def add_arc(self, u: int, v: int, cap: int) -> None:
        if cap < 0:
            raise ValueError(f"negative capacity {cap}")
        self.arcs[u].append([v, cap, len(self.arcs[v])])
        self.arcs[v].append([u, 0, len(self.arcs[u]) - 1])

    def dump_arcs(self, fp: IO[str]) -> None:
        """Debug dump: one arc per line as "from to numerator denominator"."""
        for u, lst in enumerate(self.arcs):
            for to, cap, _rev in lst:
                if cap > 0:
                    fp.write(f"{u} {to} {cap} {self.den}\n")


@dataclass
class CutResult:
    source_side: VertexSet
    flow_value: Fraction


def build_network(g: Graph, cs: CliqueSet, rho: Fraction,
                  boundary: Sequence[BoundaryClique] = ()) -> FlowNetwork:
    """Assemble the verification network for the working graph g.

    Interior cliques (all members in g): member -> clique with capacity 1 and
    clique -> member with capacity h-1. A boundary clique with cnt inside
    members uses capacity h/cnt inward and adds h/cnt to each inside member's
    source-arc mass. Every vertex gets source -> v with its (augmented)
    clique-degree mass and v -> t with capacity rho*h, clamped at zero for
    negative rho. All capacities are exact multiples of 1/den.
    """
    h = cs.h
    rho_h = Fraction(rho) * h
    den = lcm(rho_h.denominator, *(b.cnt for b in boundary)) if boundary \
        else rho_h.denominator
    net = FlowNetwork(num_vertices=g.n, den=den)

    extra_mass = [0] * g.n
    for cid in range(len(cs.cliques)):
        members = cs.cliques[cid]
        node = net.add_node()
        for v in members:
            net.add_arc(net.vertex_node(v), node, den)
            net.add_arc(node, net.vertex_node(v), (h - 1) * den)
    for b in boundary:
        if not (1 <= b.cnt <= h - 1):
            raise ValueError(f"boundary count {b.cnt} outside [1, {h - 1}]")
        node = net.add_node()
        inward = h * den // b.cnt
        for v in b.inside:
            net.add_arc(net.vertex_node(v), node, inward)
            net.add_arc(node, net.vertex_node(v), (h - 1) * den)
            extra_mass[v] += inward

    sink_cap_num = rho_h * den
    assert sink_cap_num.denominator == 1
    sink_cap = max(0, int(sink_cap_num))
    for v in range(g.n):
        net.add_arc(net.SOURCE, net.vertex_node(v), cs.degree[v] * den + extra_mass[v])
        net.add_arc(net.vertex_node(v), net.SINK, sink_cap)
    return net


def _max_flow(net: FlowNetwork) -> int:
    """Dinic's algorithm: shortest augmenting level graphs + blocking flow.

    The blocking-flow walk is iterative (explicit path stack); recursion
    would overflow on whole-graph networks.
    """
    arcs = net.arcs
    n = len(arcs)
    s, t = net.SOURCE, net.SINK
    total = 0
    while True:
        level = [-1] * n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for to, cap, _rev in arcs[u]:
                if cap > 0 and level[to] < 0:
                    level[to] = level[u] + 1
                    queue.append(to)
        if level[t] < 0:
            return total
        it = [0] * n
        path: list[tuple[int, int]] = []  # (node, arc index) along the walk
        u = s
        while True:
            if u == t:
                push = min(arcs[x][i][1] for x, i in path)
                for x, i in path:
                    arc = arcs[x][i]
                    arc[1] -= push
                    arcs[arc[0]][arc[2]][1] += push
                total += push
                path = []
                u = s
                continue
            advanced = False
            while it[u] < len(arcs[u]):
                arc = arcs[u][it[u]]
                if arc[1] > 0 and level[arc[0]] == level[u] + 1:
                    path.append((u, it[u]))
                    u = arc[0]
                    advanced = True
                    break
                it[u] += 1
            if advanced:
                continue
            if u == s:
                break  # blocking flow for this level graph is complete
            level[u] = -1
            pu, pi = path.pop()
            it[pu] += 1
            u = pu


def min_cut(net: FlowNetwork) -> CutResult:
    """Exact minimum s-t cut; the source side is the largest optimal one.

    After the max flow, a node belongs to the largest min-cut source side iff
    it has no residual path to the sink; that set is computed by a reverse
    scan from the sink over residual arcs. Consumes the network.
    """
    flow = _max_flow(net)
    arcs = net.arcs
    reaches_sink = [False] * len(arcs)
    reaches_sink[net.SINK] = True
    queue = deque([net.SINK])
    while queue:
        x = queue.popleft()
        for to, _cap, rev in arcs[x]:
            # residual arc (to -> x) exists iff its stored capacity is positive
            if not reaches_sink[to] and arcs[to][rev][1] > 0:
                reaches_sink[to] = True
                queue.append(to)
    side = tuple(v for v in range(net.num_vertices)
                 if not reaches_sink[net.vertex_node(v)])
    return CutResult(source_side=side, flow_value=Fraction(flow, net.den))


def derive_compact(g: Graph, cs: CliqueSet, rho: Fraction,
                   boundary: Sequence[BoundaryClique] = ()) -> VertexSet:
    """Largest vertex set maximizing (cliques inside) - rho * size.

    The caller supplies rho already shifted (e.g. by -1/|V|^2); with that
    shift the result is exactly the union of all maximal compact subgraphs at
    the unshifted density.
    """
    return min_cut(build_network(g, cs, rho, boundary)).source_side


def _is_component(g: Graph, inside: set[int], s: Sequence[int]) -> bool:
    """Is s exactly a connected component of g restricted to ``inside``?"""
    s_set = set(s)
    if not s_set or not s_set <= inside:
        return False
    start = min(s_set)
    comp = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if w in inside and w not in comp:
                comp.add(w)
                queue.append(w)
    return comp == s_set


def is_densest(g_s: Graph, cs_s: CliqueSet) -> bool:
    """No proper subgraph of g_s has strictly larger h-clique density.

    Distinct densities over at most |S| vertices differ by at least 1/|S|^2,
    so probing at density + 1/(2|S|^2) separates exactly: the candidate is
    self-densest iff nothing survives.
    """
    if g_s.n == 0:
        raise ValueError("empty candidate")
    d = Fraction(len(cs_s.cliques), g_s.n)
    probe = d + Fraction(1, 2 * g_s.n * g_s.n)
    return derive_compact(g_s, cs_s, probe, ()) == ()


def _check_connected(g: Graph, s: Sequence[int]) -> None:
    s_set = set(s)
    if not s_set:
        raise ValueError("empty candidate")
    start = min(s_set)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if w in s_set and w not in seen:
                seen.add(w)
                queue.append(w)
    if seen != s_set:
        raise ValueError("candidate is not connected")


def verify_basic(g: Graph, cs: CliqueSet, s: Sequence[int]) -> bool:
    """Whole-graph verification that G[s] is a maximal compact component.

    Derives every maximal rho-compact subgraph of g at rho = density of G[s]
    (shifted by -1/|V|^2) and accepts iff G[s] is exactly one of the connected
    components of the result.
    """
    _check_connected(g, s)
    s_set = set(s)
    rho = Fraction(cs.count_within(s_set), len(s_set))
    compact = derive_compact(g, cs, rho - Fraction(1, g.n * g.n), ())
    return _is_component(g, set(compact), sorted(s_set))


def verify_fast(g: Graph, cs: CliqueSet, s: Sequence[int], bounds: Bounds,
                output_membership: Sequence[bool] | None = None) -> bool:
    """Verification on a bound-guided expansion of the candidate.

    A breadth-first search grows T from s through cliques and edges that the
    compact-number bounds cannot rule out (any neighbor whose upper bound
    reaches the candidate density is taken: one sitting exactly at it can
    still extend a compact superset). If the walk closes inside s itself with
    nothing suspicious, the candidate is accepted outright. A neighbor of the
    candidate whose lower bound exceeds the candidate density, or clique
    contact from the candidate with an already-output result, certifies
    rejection (such a vertex always extends a compact superset). Otherwise
    the flow check runs on G[T] with border cliques compensated at capacity
    h/cnt, and must return G[s] as a connected component. Agrees with
    verify_basic on every input.
    """
    _check_connected(g, s)
    if output_membership is None:
        output_membership = [False] * g.n
    s_sorted = sorted(set(s))
    s_set = set(s_sorted)
    rho = Fraction(cs.count_within(s_set), len(s_set))
    upper, lower = bounds.upper, bounds.lower
    h = cs.h

    in_t: set[int] = set()
    queue: deque[int] = deque()
    visited: set[int] = set()      # cliques already processed
    suspected: list[int] = []      # cliques flagged as possibly straddling
    clean = True                   # nothing suspicious seen: early accept
    rejected = False               # certificate anchored at the candidate

    for u in s_sorted:
        if u in in_t:
            continue
        queue.append(u)
        in_t.add(u)
        while queue:
            v = queue.popleft()
            v_in_s = v in s_set
            for cid in cs.incidence[v]:
                if cid in visited:
                    continue
                visited.add(cid)
                members = cs.cliques[cid]
                if any(upper[w] < rho for w in members):
                    continue  # a member can never sit in a rho-compact set
                cnt = 1
                for w in members:
                    if w == v:
                        continue
                    if w not in in_t and output_membership[w]:
                        clean = False
                        if v_in_s:
                            rejected = True
                    if lower[w] <= rho:
                        if w not in in_t:
                            in_t.add(w)
                            queue.append(w)
                        cnt += 1
                if cnt != h:
                    suspected.append(cid)
                    clean = False
            for w in g.adj[v]:
                if w in in_t:
                    continue
                if lower[w] > rho:
                    clean = False
                    if v_in_s:
                        rejected = True
                elif upper[w] >= rho:
                    in_t.add(w)
                    queue.append(w)
    if clean and len(in_t) == len(s_set):
        return True
    if rejected:
        return False

    t_sorted = sorted(in_t)
    pos = {v: i for i, v in enumerate(t_sorted)}
    sub = induced_subgraph(g, t_sorted)
    sub_cs = restrict_cliques(cs, t_sorted)
    border: list[BoundaryClique] = []
    for cid in sorted(set(suspected)):
        inside = tuple(pos[w] for w in cs.cliques[cid] if w in in_t)
        if len(inside) < h:  # cnt == h means the clique ended up interior
            border.append(BoundaryClique(clique_id=cid, cnt=len(inside),
                                         inside=inside))
    shifted = rho - Fraction(1, len(t_sorted) * len(t_sorted))
    compact = derive_compact(sub, sub_cs, shifted, border)
    inside_orig = {t_sorted[i] for i in compact}
    return _is_component(g, inside_orig, s_sorted)
