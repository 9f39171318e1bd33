"""Graph data model and seeded random instance generators.

Every algorithm in this library consumes a :class:`GraphInstance`, a
directed weighted (and optionally capacitated) graph. Undirected graphs
are stored as two opposite directed edges with equal weight. Instances
are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np


class NoConnectedPairError(Exception):
    """No ordered node pair (s, t) with a directed path s to t exists."""


class DisconnectedError(Exception):
    """An operation requiring a connected graph got a disconnected one."""


# A RandomSource is a numpy Generator: a fixed seed gives a bit-identical
# stream within this implementation (cross-implementation equality is not
# promised).
RandomSource = np.random.Generator


def make_rng(seed: int | RandomSource) -> RandomSource:
    """Return a Generator, passing through one that already exists."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def subseed_rng(seed: int, counter: int) -> RandomSource:
    """Derive a per-instance generator from a base seed and a counter."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(counter,)))


@dataclass(frozen=True)
class GraphInstance:
    """Directed weighted graph with optional capacities and 2D points.

    Fields
    ------
    n:          number of nodes; ids are 0..n-1.
    edges:      ordered (head, tail) pairs, no duplicates, no self-loops.
    weights:    nonnegative edge weights aligned with ``edges``.
    capacities: optional nonnegative edge capacities aligned with ``edges``.
    points:     optional 2D coordinates (one per node, in the unit square
                for generated instances).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[float, ...]
    capacities: tuple[float, ...] | None = None
    points: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one node")
        if len(self.weights) != len(self.edges):
            raise ValueError("weights must align with edges")
        if self.capacities is not None and len(self.capacities) != len(self.edges):
            raise ValueError("capacities must align with edges")
        if self.points is not None and len(self.points) != self.n:
            raise ValueError("points must list one coordinate pair per node")
        seen = set()
        for (u, v) in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) references a node outside [0,{self.n})")
            if u == v:
                raise ValueError(f"self-loop ({u},{v}) not allowed")
            if (u, v) in seen:
                raise ValueError(f"duplicate directed edge ({u},{v})")
            seen.add((u, v))
        for w in self.weights:
            if w < 0:
                raise ValueError("edge weights must be nonnegative")
        if self.capacities is not None:
            for c in self.capacities:
                if c < 0:
                    raise ValueError("edge capacities must be nonnegative")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def weight_of(self) -> dict[tuple[int, int], float]:
        """Mapping (u, v) -> weight."""
        return dict(zip(self.edges, self.weights))

    def out_adjacency(self) -> list[list[tuple[int, float]]]:
        """Per-node list of (successor, weight), successors ascending."""
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for (u, v), w in zip(self.edges, self.weights):
            adj[u].append((v, w))
        for lst in adj:
            lst.sort()
        return adj

    def in_adjacency(self) -> list[list[tuple[int, float]]]:
        """Per-node list of (predecessor, weight), predecessors ascending."""
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for (u, v), w in zip(self.edges, self.weights):
            adj[v].append((u, w))
        for lst in adj:
            lst.sort()
        return adj

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (no self-loops by construction)."""
        a = np.zeros((self.n, self.n))
        for (u, v) in self.edges:
            a[u, v] = 1.0
        return a

    def weight_matrix(self) -> np.ndarray:
        """Dense weight matrix: w_uv on edges, +inf elsewhere, 0 diagonal."""
        m = np.full((self.n, self.n), np.inf)
        np.fill_diagonal(m, 0.0)
        for (u, v), w in zip(self.edges, self.weights):
            m[u, v] = w
        return m

    def capacity_matrix(self, fall_back_to_weights: bool = False) -> np.ndarray:
        """Dense capacity matrix, 0 for non-edges.

        When the instance carries no capacities, weights stand in for them
        if ``fall_back_to_weights`` is set, otherwise this raises.
        """
        values = self.capacities
        if values is None:
            if not fall_back_to_weights:
                raise ValueError("graph has no capacities")
            values = self.weights
        c = np.zeros((self.n, self.n))
        for (u, v), cap in zip(self.edges, values):
            c[u, v] = cap
        return c

    def is_undirected(self) -> bool:
        """True when every edge has a reverse edge of equal weight."""
        lookup = self.weight_of()
        return all(lookup.get((v, u)) == w for (u, v), w in lookup.items())

    def reversed(self) -> "GraphInstance":
        """Graph with every edge flipped (weights/capacities follow)."""
        order = sorted(range(len(self.edges)), key=lambda i: (self.edges[i][1], self.edges[i][0]))
        return GraphInstance(
            n=self.n,
            edges=tuple((self.edges[i][1], self.edges[i][0]) for i in order),
            weights=tuple(self.weights[i] for i in order),
            capacities=None if self.capacities is None else tuple(self.capacities[i] for i in order),
            points=self.points,
        )


def _from_pairs(n, pairs, pair_weights, pair_capacities=None, points=None) -> GraphInstance:
    """Build an undirected instance from unordered pairs (both orientations stored)."""
    edges = []
    weights = []
    capacities = [] if pair_capacities is not None else None
    for idx, (u, v) in enumerate(pairs):
        for (a, b) in ((u, v), (v, u)):
            edges.append((a, b))
            weights.append(float(pair_weights[idx]))
            if capacities is not None:
                capacities.append(float(pair_capacities[idx]))
    order = sorted(range(len(edges)), key=lambda i: edges[i])
    return GraphInstance(
        n=n,
        edges=tuple(edges[i] for i in order),
        weights=tuple(weights[i] for i in order),
        capacities=None if capacities is None else tuple(capacities[i] for i in order),
        points=None if points is None else tuple((float(x), float(y)) for x, y in points),
    )


def er_graph(n: int, p: float, seed: int | RandomSource,
             weight_range: tuple[float, float] = (0.0, 1.0)) -> GraphInstance:
    """Erdos-Renyi G(n, p) with uniform edge weights.

    Each unordered pair is included independently with probability ``p``;
    included pairs yield both orientations with one shared weight drawn
    uniformly from ``weight_range``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = make_rng(seed)
    lo, hi = weight_range
    pairs, weights = [], []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                pairs.append((u, v))
                weights.append(lo + (hi - lo) * rng.random())
    return _from_pairs(n, pairs, weights)


def sparse_edge_probability(n: int) -> float:
    """The sparse-regime edge probability log(n)/n (natural log)."""
    return math.log(n) / n


def two_community_graph(n: int, seed: int | RandomSource,
                        p_in: float = 0.75, p_out: float = 0.05) -> GraphInstance:
    """Two equal communities, dense inside and sparse across.

    Intra-community pairs appear with probability ``p_in`` (default 0.75),
    cross-community pairs with ``p_out`` (default 0.05). Capacities are
    sampled uniformly in [0, 10] and then min-max rescaled; weights equal
    the rescaled capacities.
    """
    if n % 2 != 0 or n < 4:
        raise ValueError("n must be even and >= 4")
    rng = make_rng(seed)
    half = n // 2
    pairs, caps = [], []
    for u in range(n):
        for v in range(u + 1, n):
            same = (u < half) == (v < half)
            if rng.random() < (p_in if same else p_out):
                pairs.append((u, v))
                caps.append(10.0 * rng.random())
    if caps:
        lo, hi = min(caps), max(caps)
        if hi > lo:
            caps = [(c - lo) / (hi - lo) for c in caps]
        else:
            caps = [1.0 for _ in caps]
    return _from_pairs(n, pairs, caps, pair_capacities=caps)


def bipartite_graph(n1: int, n2: int, p: float, seed: int | RandomSource) -> GraphInstance:
    """Bipartite graph: nodes 0..n1-1 vs n1..n1+n2-1, unit capacities.

    Each cross pair appears with probability ``p``; present edges carry
    weight and capacity 1 (absent edges are the capacity-0 case).
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("both parts need at least one node")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = make_rng(seed)
    pairs = []
    for u in range(n1):
        for v in range(n2):
            if rng.random() < p:
                pairs.append((u, n1 + v))
    ones = [1.0] * len(pairs)
    return _from_pairs(n1 + n2, pairs, ones, pair_capacities=ones)


def euclidean_clique_from_points(points) -> GraphInstance:
    """Complete graph over 2D points with Euclidean-distance weights."""
    pts = [(float(x), float(y)) for x, y in points]
    n = len(pts)
    if n < 3:
        raise ValueError("need at least 3 points")
    pairs, weights = [], []
    for u in range(n):
        for v in range(u + 1, n):
            pairs.append((u, v))
            weights.append(math.dist(pts[u], pts[v]))
    return _from_pairs(n, pairs, weights, points=pts)


def euclidean_clique(n: int, seed: int | RandomSource) -> GraphInstance:
    """Complete metric graph over n uniform points in the unit square."""
    if n < 3:
        raise ValueError("n must be >= 3")
    rng = make_rng(seed)
    return euclidean_clique_from_points(rng.random((n, 2)))


def _reachable_from(adj: list[list[tuple[int, float]]], s: int) -> list[int]:
    seen = [False] * len(adj)
    seen[s] = True
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v, _ in adj[u]:
            if not seen[v]:
                seen[v] = True
                queue.append(v)
    return [v for v, ok in enumerate(seen) if ok]


def reachable_pair(g: GraphInstance, seed: int | RandomSource,
                   retries: int = 64) -> tuple[int, int]:
    """Uniformly sample (s, t), s != t, with a directed path s to t.

    Up to ``retries`` rejection samples, then an exhaustive scan over all
    connected ordered pairs (still uniform). Raises NoConnectedPairError
    when no such pair exists.
    """
    rng = make_rng(seed)
    adj = g.out_adjacency()
    if g.n >= 2:
        for _ in range(retries):
            s = int(rng.integers(g.n))
            t = int(rng.integers(g.n))
            if s == t:
                continue
            reach = _reachable_from(adj, s)
            if t in reach:
                return s, t
    pairs = []
    for s in range(g.n):
        for t in _reachable_from(adj, s):
            if t != s:
                pairs.append((s, t))
    if not pairs:
        raise NoConnectedPairError("graph has no connected ordered pair")
    return pairs[int(rng.integers(len(pairs)))]


def is_connected(g: GraphInstance) -> bool:
    """True when every node is reachable from node 0 (undirected sense for
    undirected instances, directed reachability otherwise)."""
    return len(_reachable_from(g.out_adjacency(), 0)) == g.n


def graph_to_json_dict(g: GraphInstance) -> dict:
    """JSON object {"n", "edges", "weights", ["capacities"], ["points"]}."""
    obj = {
        "n": g.n,
        "edges": [[u, v] for (u, v) in g.edges],
        "weights": list(g.weights),
    }
    if g.capacities is not None:
        obj["capacities"] = list(g.capacities)
    if g.points is not None:
        obj["points"] = [[x, y] for (x, y) in g.points]
    return obj


def graph_from_json_dict(obj: dict) -> GraphInstance:
    return GraphInstance(
        n=int(obj["n"]),
        edges=tuple((int(u), int(v)) for u, v in obj["edges"]),
        weights=tuple(float(w) for w in obj["weights"]),
        capacities=None if "capacities" not in obj else tuple(float(c) for c in obj["capacities"]),
        points=None if "points" not in obj else tuple((float(x), float(y)) for x, y in obj["points"]),
    )
