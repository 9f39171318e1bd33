"""Classical graph algorithm executors that record full trajectories.

Each executor returns a :class:`Trajectory` holding the algorithm's
inputs, one snapshot per step (the hints), and the final outputs. Runs
are deterministic: all priority ties break on the smallest node id, so a
given graph always yields the same trajectory.

Hint field names are part of the dataset format:
  bfs           {"r": int[n]}
  bellman_ford  {"d": real[n], "pred": int[n]}
  dijkstra/prim {"popped": int, "d_or_key": real[n], "pred": int[n]}
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from enum import Enum

from .graphs import DisconnectedError, GraphInstance

NULL_PRED = -1  # serialized NULL predecessor


class NegativeWeightError(Exception):
    """Dijkstra requires nonnegative edge weights."""


@dataclass
class Trajectory:
    """An algorithm run: inputs, per-step hints, and outputs.

    Hints are ordered step snapshots; replaying the outputs from the last
    hint is a no-op. ``step_count`` equals ``len(hints)``.
    """

    algorithm: str
    inputs: dict
    hints: list[dict]
    outputs: dict
    step_count: int

    def to_json_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "inputs": self.inputs,
            "hints": self.hints,
            "outputs": self.outputs,
            "step_count": self.step_count,
        }


def trajectory_from_json_dict(obj: dict) -> Trajectory:
    return Trajectory(
        algorithm=obj["algorithm"],
        inputs=obj["inputs"],
        hints=obj["hints"],
        outputs=obj["outputs"],
        step_count=int(obj["step_count"]),
    )


def run_bfs(g: GraphInstance, s: int) -> Trajectory:
    """Breadth-first reachability from s.

    Hint t (1-based) marks the nodes reachable within t edges; there are
    exactly eccentricity(s) hints. The output r is the 0/1 reachability
    vector.
    """
    adj = g.out_adjacency()
    r = [0] * g.n
    r[s] = 1
    frontier = [s]
    hints = []
    while True:
        nxt = []
        for u in frontier:
            for v, _ in adj[u]:
                if not r[v]:
                    r[v] = 1
                    nxt.append(v)
        if not nxt:
            break
        hints.append({"r": list(r)})
        frontier = sorted(nxt)
    return Trajectory("bfs", {"s": s}, hints, {"r": list(r)}, len(hints))


def run_bellman_ford(g: GraphInstance, s: int) -> Trajectory:
    """Bellman-Ford shortest paths with synchronous relaxation rounds.

    Runs the full n-1 rounds, recording {d, pred} after each one; the
    first round that changes nothing is flagged in the outputs as
    ``converged_round`` (-1 if every round changed something). Distances
    are exact min-plus arithmetic; pred ties break on the smallest
    predecessor id and pred[s] stays NULL (-1).
    """
    inf = float("inf")
    in_adj = g.in_adjacency()
    d = [inf] * g.n
    pred = [NULL_PRED] * g.n
    d[s] = 0.0
    hints = []
    converged = -1
    for round_no in range(1, g.n):
        new_d = list(d)
        new_pred = list(pred)
        for v in range(g.n):
            for u, w in in_adj[v]:
                cand = d[u] + w
                if cand < new_d[v]:
                    new_d[v] = cand
                    new_pred[v] = u
        changed = new_d != d or new_pred != pred
        d, pred = new_d, new_pred
        hints.append({"d": list(d), "pred": list(pred)})
        if not changed and converged == -1:
            converged = round_no
    outputs = {"d": list(d), "pred": list(pred), "converged_round": converged}
    return Trajectory("bellman_ford", {"s": s}, hints, outputs, len(hints))


def run_dijkstra(g: GraphInstance, s: int) -> Trajectory:
    """Dijkstra's algorithm; exactly n extractions, ties by node id.

    Each hint records the popped node plus the d/pred snapshots after its
    neighbors were relaxed. Unreachable nodes are extracted last, in id
    order, with d = +inf.
    """
    if any(w < 0 for w in g.weights):
        raise NegativeWeightError("negative edge weight")
    inf = float("inf")
    adj = g.out_adjacency()
    d = [inf] * g.n
    pred = [NULL_PRED] * g.n
    d[s] = 0.0
    heap = [(0.0, s)]
    done = [False] * g.n
    hints = []
    while heap:
        dist, u = heapq.heappop(heap)
        if done[u] or dist > d[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            cand = d[u] + w
            if not done[v] and cand < d[v]:
                d[v] = cand
                pred[v] = u
                heapq.heappush(heap, (cand, v))
        hints.append({"popped": u, "d_or_key": list(d), "pred": list(pred)})
    for u in range(g.n):
        if not done[u]:
            hints.append({"popped": u, "d_or_key": list(d), "pred": list(pred)})
    outputs = {"d": list(d), "pred": list(pred)}
    return Trajectory("dijkstra", {"s": s}, hints, outputs, len(hints))


def run_prim(g: GraphInstance, start: int = 0) -> Trajectory:
    """Prim's minimum spanning tree from ``start`` (node 0 by default).

    Requires a connected undirected graph. Each hint records the popped
    node with the key/pred snapshots after updating its neighbors; the
    final key vector holds the selected edge weights, so its sum is the
    MST weight.
    """
    inf = float("inf")
    adj = g.out_adjacency()
    key = [inf] * g.n
    pred = [NULL_PRED] * g.n
    key[start] = 0.0
    in_tree = [False] * g.n
    heap = [(0.0, start)]
    hints = []
    popped = 0
    while heap:
        k, u = heapq.heappop(heap)
        if in_tree[u] or k > key[u]:
            continue
        in_tree[u] = True
        popped += 1
        for v, w in adj[u]:
            if not in_tree[v] and w < key[v]:
                key[v] = w
                pred[v] = u
                heapq.heappush(heap, (w, v))
        hints.append({"popped": u, "d_or_key": list(key), "pred": list(pred)})
    if popped < g.n:
        raise DisconnectedError("spanning tree requires a connected graph")
    outputs = {"key": list(key), "pred": list(pred)}
    return Trajectory("prim", {"start": start}, hints, outputs, len(hints))


def mst_weight(t: Trajectory) -> float:
    """Total weight of the spanning tree recorded by a prim trajectory."""
    return float(sum(t.outputs["key"]))


@dataclass
class ColorRefinement:
    """Rounds of node colorings; the last round repeats the partition of
    the one before it (``converged_round`` indexes that last round)."""

    rounds: list[list[int]] = field(default_factory=list)
    converged_round: int = 0


def _canonical(colors: list) -> list[int]:
    """Relabel colors to consecutive ints by first occurrence."""
    table: dict = {}
    out = []
    for c in colors:
        if c not in table:
            table[c] = len(table)
        out.append(table[c])
    return out


def wl_refine(g: GraphInstance) -> ColorRefinement:
    """1-dimensional color refinement until the partition stabilizes.

    Each round maps every node's (color, sorted multiset of neighbor
    colors) signature to a fresh integer through an injective relabeling
    table, which is collision-free by construction. Converges within n
    rounds.
    """
    adj = [[v for v, _ in lst] for lst in g.out_adjacency()]
    colors = [0] * g.n
    rounds = [list(colors)]
    while True:
        signatures = [(colors[v], tuple(sorted(colors[u] for u in adj[v])))
                      for v in range(g.n)]
        new_colors = _canonical(signatures)
        rounds.append(new_colors)
        if new_colors == colors:
            return ColorRefinement(rounds=rounds, converged_round=len(rounds) - 1)
        colors = new_colors


class WlVerdict(Enum):
    NOT_ISOMORPHIC = "NotIsomorphic"
    POSSIBLY_ISOMORPHIC = "PossiblyIsomorphic"


def wl_test(g1: GraphInstance, g2: GraphInstance) -> WlVerdict:
    """Color-refinement isomorphism test.

    NOT_ISOMORPHIC is sound; POSSIBLY_ISOMORPHIC may be wrong (e.g. a
    6-cycle versus two triangles). Both graphs are refined jointly on
    their disjoint union so color ids are comparable.
    """
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return WlVerdict.NOT_ISOMORPHIC
    union_edges = list(g1.edges) + [(u + g1.n, v + g1.n) for (u, v) in g2.edges]
    union = GraphInstance(
        n=g1.n + g2.n,
        edges=tuple(union_edges),
        weights=tuple(1.0 for _ in union_edges),
    )
    final = wl_refine(union).rounds[-1]
    hist1 = sorted(final[: g1.n])
    hist2 = sorted(final[g1.n:])
    return WlVerdict.POSSIBLY_ISOMORPHIC if hist1 == hist2 else WlVerdict.NOT_ISOMORPHIC
