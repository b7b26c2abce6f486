"""Sequential Frank-Wolfe weight distribution over h-cliques.

Each clique owns one unit of weight split among its h member vertices; the
iteration repeatedly shifts weight toward each clique's currently lightest
member with step size 1/(t+1), driving the per-vertex totals toward the
compact numbers. Updates are sequential over cliques in id order and read
totals written earlier in the same round, so a state must not be iterated
from two threads at once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import CliqueSet


@dataclass
class WeightState:
    """Weight shares per (clique, position) and per-vertex totals.

    Invariants (up to float drift, checked in tests at 1e-9):
    each clique's shares sum to 1; ``load[u]`` equals the sum of u's shares;
    the loads sum to the clique count. The simplex constraint is maintained
    by construction (scale-and-add updates only), never renormalized.
    """

    cs: CliqueSet
    share: list[list[float]]
    load: list[float]
    rounds_done: int = 0

    def copy(self) -> "WeightState":
        return WeightState(cs=self.cs, share=[row[:] for row in self.share],
                           load=self.load[:], rounds_done=self.rounds_done)


def init_weights(cs: CliqueSet) -> WeightState:
    """Uniform start: every share is 1/h, so load(u) = degree(u)/h."""
    h = cs.h
    share = [[1.0 / h] * h for _ in cs.cliques]
    load = [d / h for d in cs.degree]
    return WeightState(cs=cs, share=share, load=load)


def run_iterations(ws: WeightState, rounds: int) -> WeightState:
    """Run ``rounds`` sequential Frank-Wolfe rounds in place and return ws.

    Round t (starting at rounds_done+1) scales all shares and loads by
    1 - 1/(t+1), then walks cliques in id order adding 1/(t+1) to the share
    and load of each clique's minimum-load member. Ties pick the smallest
    vertex id (member tuples are sorted). T=0 is the identity.
    """
    cliques = ws.cs.cliques
    share = ws.share
    load = ws.load
    for t in range(ws.rounds_done + 1, ws.rounds_done + rounds + 1):
        gamma = 1.0 / (t + 1)
        keep = 1.0 - gamma
        for v in range(len(load)):
            load[v] *= keep
        for row in share:
            for i in range(len(row)):
                row[i] *= keep
        for cid, members in enumerate(cliques):
            best_pos = 0
            best = load[members[0]]
            for i in range(1, len(members)):
                li = load[members[i]]
                if li < best:
                    best = li
                    best_pos = i
            share[cid][best_pos] += gamma
            load[members[best_pos]] = best + gamma
    ws.rounds_done += rounds
    return ws


def objective(ws: WeightState) -> float:
    """Sum of squared per-vertex loads, the quantity the iteration minimizes."""
    return sum(x * x for x in ws.load)
