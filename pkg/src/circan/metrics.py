"""Distance structure of graphs.

BFS distances are the ground-truth oracle everything else is checked
against. Circulant graphs get a single-source shortcut: their distance
matrix is circulant, so one BFS from vertex 0 determines all pairs (the
rotation expansion is itself verified against all-pairs BFS in the test
suite).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import CirculantSpec, GenericGraph, _circulant_matrix
from .errors import DisconnectedGraphError, PropertyStarViolatedError

# Circulant BFS switches from the plain queue implementation to vectorized
# level expansion once the neighborhood is wide enough to amortize it.
_DENSE_BFS_MIN_DEGREE = 33


def reciprocal_sum(counts: np.ndarray | list[int]) -> Fraction:
    """Exact sum of count[d] / d over distances d >= 1."""
    total = Fraction(0)
    for d, c in enumerate(counts):
        if d >= 1 and c:
            total += Fraction(int(c), d)
    return total


@dataclass(frozen=True, eq=False)
class DistanceVector:
    """Distances from vertex 0 of a connected circulant graph.

    This is the first row of the (circulant) distance matrix.
    """

    n: int
    d: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.d, dtype=np.int64)
        if arr.shape != (self.n,):
            raise ValueError(f"expected {self.n} entries, got shape {arr.shape}")
        if arr[0] != 0:
            raise ValueError("distance to vertex 0 must be 0")
        if self.n > 1 and arr[1:].min() < 1:
            raise ValueError("all distances from vertex 0 must be positive")
        if not np.array_equal(arr[1:], arr[1:][::-1]):
            raise ValueError("circulant distance vector must satisfy d[v] == d[n-v]")
        if arr.flags.writeable:
            arr = arr.copy()
            arr.setflags(write=False)
        object.__setattr__(self, "d", arr)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceVector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.d, other.d)

    @property
    def transmission(self) -> int:
        """Sum of distances from vertex 0 to all others."""
        return int(self.d.sum())

    @property
    def reciprocal_transmission(self) -> Fraction:
        """Exact sum of reciprocal distances from vertex 0."""
        return reciprocal_sum(self.distance_counts())

    @property
    def diameter(self) -> int:
        return int(self.d.max())

    @property
    def degree(self) -> int:
        """Number of distance-1 vertices, i.e. the (common) vertex degree."""
        return int((self.d == 1).sum())

    def distance_counts(self) -> np.ndarray:
        """counts[d] = number of vertices at distance d from vertex 0."""
        return np.bincount(self.d)


def bfs_distances(g: GenericGraph, source: int) -> np.ndarray:
    """Hop counts from ``source``; unreachable vertices are marked -1."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    adj = g.adj
    n = g.n
    dist = np.full(n, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.zeros(n, dtype=bool)
    frontier[source] = True
    undiscovered = ~frontier
    d = 0
    while True:
        d += 1
        fr_idx = np.flatnonzero(frontier)
        und_idx = np.flatnonzero(undiscovered)
        if fr_idx.size == 0 or und_idx.size == 0:
            break
        # Expand from whichever side has fewer rows to slice.
        if fr_idx.size <= und_idx.size:
            new_mask = adj[fr_idx].any(axis=0) & undiscovered
        else:
            hits = (adj[und_idx] & frontier).any(axis=1)
            new_mask = np.zeros(n, dtype=bool)
            new_mask[und_idx[hits]] = True
        if not new_mask.any():
            break
        dist[new_mask] = d
        undiscovered &= ~new_mask
        frontier = new_mask
    return dist


def all_pairs_distances(g: GenericGraph) -> np.ndarray:
    """Full n x n distance matrix by BFS; -1 marks unreachable pairs.

    Uses simultaneous level expansion through boolean matrix products, which
    is exact (reachability counts stay far below float32 precision at the
    orders this library targets).
    """
    n = g.n
    if n > 2048:
        return np.stack([bfs_distances(g, s) for s in range(n)])
    adj_f = g.adj.astype(np.float32)
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    frontier = g.adj.copy()
    dist[frontier] = 1
    reached = frontier | np.eye(n, dtype=bool)
    d = 1
    while frontier.any():
        d += 1
        new = (frontier.astype(np.float32) @ adj_f > 0) & ~reached
        if not new.any():
            break
        dist[new] = d
        reached |= new
        frontier = new
    return dist


def _circulant_bfs_queue(n: int, offsets: tuple[int, ...]) -> list[int]:
    dist = [-1] * n
    dist[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for off in offsets:
            w = u + off
            if w >= n:
                w -= n
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def _circulant_bfs_levels(n: int, offsets: tuple[int, ...]) -> np.ndarray:
    """Level-set BFS from 0 using only the first adjacency row (dense case)."""
    row0 = np.zeros(n, dtype=bool)
    row0[list(offsets)] = True
    dist = np.full(n, -1, dtype=np.int64)
    dist[0] = 0
    dist[row0] = 1
    frontier = row0
    undiscovered = ~row0
    undiscovered[0] = False
    d = 1
    while undiscovered.any():
        d += 1
        und_idx = np.flatnonzero(undiscovered)
        rows = np.stack([np.roll(row0, int(v)) for v in und_idx])
        hits = (rows & frontier).any(axis=1)
        new_idx = und_idx[hits]
        if new_idx.size == 0:
            break
        dist[new_idx] = d
        undiscovered[new_idx] = False
        frontier = np.zeros(n, dtype=bool)
        frontier[new_idx] = True
    return dist


def distance_vector(spec: CirculantSpec) -> DistanceVector:
    """BFS distances from vertex 0 of the circulant graph ``spec``.

    Raises :class:`DisconnectedGraphError` when gcd-type obstructions leave
    part of the vertex set unreachable.
    """
    offsets = spec.offsets()
    if len(offsets) >= _DENSE_BFS_MIN_DEGREE and spec.n > 64:
        dist = _circulant_bfs_levels(spec.n, offsets)
        if (dist < 0).any():
            raise DisconnectedGraphError(f"{spec} is disconnected")
        return DistanceVector(spec.n, dist)
    dist_list = _circulant_bfs_queue(spec.n, offsets)
    if min(dist_list) < 0:
        raise DisconnectedGraphError(f"{spec} is disconnected")
    return DistanceVector(spec.n, np.array(dist_list, dtype=np.int64))


def distance_matrix(dv: DistanceVector) -> np.ndarray:
    """Expand a distance vector into the full circulant distance matrix:
    entry (i, j) = dv.d[(j - i) mod n]."""
    return _circulant_matrix(dv.d)


def is_connected(g: GenericGraph) -> bool:
    """True iff BFS from vertex 0 reaches every vertex."""
    if g.n == 0:
        return False
    return bool((bfs_distances(g, 0) >= 0).all())


def diameter(g: GenericGraph) -> int:
    """Maximum distance over all vertex pairs."""
    if g.jumps is not None:
        # Vertex-transitive: the eccentricity of vertex 0 is the diameter.
        return distance_vector(CirculantSpec(g.n, g.jumps)).diameter
    dist = all_pairs_distances(g)
    if (dist < 0).any():
        raise DisconnectedGraphError("graph is disconnected")
    return int(dist.max())


@dataclass(frozen=True)
class MetricsSummary:
    """Distance summary of a connected graph.

    ``degree``, ``transmission`` and ``reciprocal_transmission`` are the
    common per-vertex values; they are None when the graph is not regular
    (respectively not transmission-regular).
    """

    n: int
    edge_count: int
    degree: int | None
    transmission: int | None
    reciprocal_transmission: Fraction | None
    diameter: int
    transmission_regular: bool
    connected: bool = True


def metrics_summary(g: GenericGraph) -> MetricsSummary:
    """Compute the distance summary, raising on disconnected input."""
    degrees = g.degrees()
    degree = int(degrees[0]) if g.n and (degrees == degrees[0]).all() else None
    if g.jumps is not None:
        dv = distance_vector(CirculantSpec(g.n, g.jumps))
        return MetricsSummary(
            n=g.n,
            edge_count=g.edge_count,
            degree=degree,
            transmission=dv.transmission,
            reciprocal_transmission=dv.reciprocal_transmission,
            diameter=dv.diameter,
            transmission_regular=True,
        )
    dist = all_pairs_distances(g)
    if (dist < 0).any():
        raise DisconnectedGraphError("graph is disconnected")
    sigmas = dist.sum(axis=1)
    t_regular = bool((sigmas == sigmas[0]).all())
    transmission = int(sigmas[0]) if t_regular else None
    rs = reciprocal_sum(np.bincount(dist[0])) if t_regular else None
    return MetricsSummary(
        n=g.n,
        edge_count=g.edge_count,
        degree=degree,
        transmission=transmission,
        reciprocal_transmission=rs,
        diameter=int(dist.max()),
        transmission_regular=t_regular,
    )


def has_property_star(g: GenericGraph) -> bool:
    """True iff every edge {u, v} has a third vertex adjacent to neither
    endpoint."""
    non = ~g.adj
    np.fill_diagonal(non, False)
    edges = g.edges()
    for start in range(0, len(edges), 4096):
        chunk = edges[start : start + 4096]
        ok = (non[chunk[:, 0]] & non[chunk[:, 1]]).any(axis=1)
        if not ok.all():
            return False
    return True


@dataclass(frozen=True)
class StarComplementPrediction:
    """Predicted complement distances for a graph with the star property:
    distance 2 between originally adjacent pairs, 1 between distinct
    non-adjacent pairs."""

    n: int
    matrix: np.ndarray
    wiener: int
    diameter: int = 2


def complement_distance_by_star(g: GenericGraph) -> StarComplementPrediction:
    """Predict the complement's distance matrix from the star property.

    The prediction implies the complement is connected with diameter 2 and
    Wiener index C(n, 2) + m; callers cross-check those against BFS.
    """
    if not has_property_star(g):
        raise PropertyStarViolatedError(
            "some edge has no vertex non-adjacent to both endpoints"
        )
    matrix = np.where(g.adj, 2, 1).astype(np.int64)
    np.fill_diagonal(matrix, 0)
    matrix.setflags(write=False)
    wiener = g.n * (g.n - 1) // 2 + g.edge_count
    return StarComplementPrediction(n=g.n, matrix=matrix, wiener=wiener)
