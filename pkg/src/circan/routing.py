"""Routings, load profiles, and forwarding indices.

A routing fixes one elementary path for every ordered vertex pair. The
vertex load counts paths that cross a vertex strictly inside; the
vertex-forwarding index of a connected circulant equals the transmission
minus (n - 1), and a rotation-invariant shortest-path routing attains it
with all vertex loads equal. For the edge-forwarding index only bounds are
produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

import numpy as np

from .core import CirculantSpec, GenericGraph, build_circulant
from .errors import (
    FixtureParseError,
    InvalidEdgeError,
    MissingPairError,
    NonElementaryPathError,
    VertexRangeError,
)
from .metrics import DistanceVector, all_pairs_distances, distance_vector

# Explicit path dictionaries get large quadratically; above this order
# rotation routings stay in compact base-path form and loads are computed
# by streaming over shifts.
EXPLICIT_PATH_LIMIT = 512


@dataclass(frozen=True)
class LoadProfile:
    """Per-vertex inner-path counts and per-edge traversal counts."""

    vertex_loads: np.ndarray
    edge_loads: Mapping[tuple[int, int], int]
    max_vertex_load: int
    max_edge_load: int


class Routing:
    """Explicit routing: one elementary path per ordered vertex pair.

    ``minimal`` and ``symmetric`` are computed during validation, never
    asserted by the caller.
    """

    __slots__ = ("n", "paths", "minimal", "symmetric")

    def __init__(
        self,
        n: int,
        paths: dict[tuple[int, int], tuple[int, ...]],
        *,
        minimal: bool,
        symmetric: bool,
    ) -> None:
        self.n = n
        self.paths = paths
        self.minimal = minimal
        self.symmetric = symmetric

    @classmethod
    def from_paths(
        cls, g: GenericGraph, paths: Iterable[tuple[int, ...]]
    ) -> "Routing":
        """Validate a collection of paths as a routing of ``g``."""
        n = g.n
        table: dict[tuple[int, int], tuple[int, ...]] = {}
        for path in paths:
            path = tuple(int(v) for v in path)
            if len(path) < 2:
                raise NonElementaryPathError(f"path {path} has fewer than two vertices")
            if len(set(path)) != len(path):
                raise NonElementaryPathError(f"path {path} repeats a vertex")
            for u, v in zip(path, path[1:]):
                if not g.has_edge(u, v):
                    raise InvalidEdgeError(f"path {path} uses non-edge ({u}, {v})")
            key = (path[0], path[-1])
            if key in table:
                raise MissingPairError(f"ordered pair {key} routed twice")
            table[key] = path
        if len(table) != n * (n - 1):
            missing = n * (n - 1) - len(table)
            raise MissingPairError(f"{missing} ordered pairs have no path")
        dist = all_pairs_distances(g)
        minimal = all(len(p) - 1 == dist[x, y] for (x, y), p in table.items())
        symmetric = all(
            table[(y, x)] == tuple(reversed(p)) for (x, y), p in table.items()
        )
        return cls(n, table, minimal=minimal, symmetric=symmetric)

    def __len__(self) -> int:
        return len(self.paths)


def parse_routing_fixture(text: str, g: GenericGraph) -> Routing:
    """Parse a routing fixture: one whitespace-separated path per line,
    using the companion graph fixture's vertex indexing."""
    base = g.index_base
    paths = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            raw = [int(tok) for tok in stripped.split()]
        except ValueError:
            raise FixtureParseError(f"line {lineno}: non-integer vertex in {stripped!r}")
        path = tuple(v - base for v in raw)
        for v in path:
            if not 0 <= v < g.n:
                raise VertexRangeError(
                    f"line {lineno}: vertex {v + base} outside 0..{g.n - 1 + base}"
                )
        paths.append(path)
    return Routing.from_paths(g, paths)


class RotationRouting:
    """Shortest-path routing of a circulant, closed under rotation.

    One BFS tree from vertex 0 (parent = smallest-numbered neighbor one
    level closer) fixes the paths 0 -> v; the path for (x, x + v) is that
    base path shifted by x. All n(n-1) paths are shortest by construction
    of the tree, which validation re-checks.
    """

    __slots__ = ("spec", "n", "base_paths", "minimal", "symmetric")

    def __init__(self, spec: CirculantSpec, base_paths: tuple[tuple[int, ...], ...]):
        self.spec = spec
        self.n = spec.n
        self.base_paths = base_paths  # base_paths[v - 1] is the path 0 -> v
        self.minimal = True
        self.symmetric = self._check_symmetric()

    def _check_symmetric(self) -> bool:
        n = self.n
        for v in range(1, n):
            shifted = tuple((u + v) % n for u in self.base_paths[n - v - 1])
            if shifted != tuple(reversed(self.base_paths[v - 1])):
                return False
        return True

    def path(self, x: int, y: int) -> tuple[int, ...]:
        v = (y - x) % self.n
        if v == 0:
            raise KeyError("routing paths join distinct vertices")
        return tuple((u + x) % self.n for u in self.base_paths[v - 1])

    def paths(self) -> Iterator[tuple[int, ...]]:
        for x in range(self.n):
            for base in self.base_paths:
                yield tuple((u + x) % self.n for u in base)

    def to_explicit(self, g: GenericGraph | None = None) -> Routing:
        """Materialize and fully re-validate every path (small orders)."""
        if self.n > EXPLICIT_PATH_LIMIT:
            raise ValueError(
                f"explicit materialization capped at n={EXPLICIT_PATH_LIMIT}"
            )
        if g is None:
            g = build_circulant(self.spec)
        return Routing.from_paths(g, self.paths())

    def vertex_loads(self) -> np.ndarray:
        """Inner-vertex counts accumulated over all n(n-1) shifted paths."""
        n = self.n
        inner = [p[1:-1] for p in self.base_paths if len(p) > 2]
        if not inner:
            return np.zeros(n, dtype=np.int64)
        flat = np.concatenate([np.asarray(p, dtype=np.int64) for p in inner])
        shifted = (flat[:, None] + np.arange(n, dtype=np.int64)[None, :]) % n
        return np.bincount(shifted.ravel(), minlength=n)

    def edge_loads(self) -> dict[tuple[int, int], int]:
        """Undirected traversal counts accumulated over all shifted paths."""
        n = self.n
        heads = np.concatenate(
            [np.asarray(p[:-1], dtype=np.int64) for p in self.base_paths]
        )
        tails = np.concatenate(
            [np.asarray(p[1:], dtype=np.int64) for p in self.base_paths]
        )
        counts = np.zeros(n * n, dtype=np.int64)
        chunk = max(1, 4_000_000 // max(1, heads.size))
        for start in range(0, n, chunk):
            shifts = np.arange(start, min(start + chunk, n), dtype=np.int64)
            u = (heads[None, :] + shifts[:, None]) % n
            v = (tails[None, :] + shifts[:, None]) % n
            lo = np.minimum(u, v)
            hi = np.maximum(u, v)
            counts += np.bincount((lo * n + hi).ravel(), minlength=n * n)
        nz = np.flatnonzero(counts)
        return {(int(key // n), int(key % n)): int(counts[key]) for key in nz}


def build_rotation_routing(spec: CirculantSpec) -> RotationRouting:
    """Construct the rotation-invariant shortest-path routing of ``spec``."""
    dv = distance_vector(spec)
    n = spec.n
    dist = dv.d
    offs = np.asarray(spec.offsets(), dtype=np.int64)
    parent = np.zeros(n, dtype=np.int64)
    for start in range(1, n, 4096):
        vs = np.arange(start, min(start + 4096, n), dtype=np.int64)
        nbrs = (vs[:, None] + offs[None, :]) % n
        closer = dist[nbrs] == dist[vs][:, None] - 1
        parent[vs] = np.where(closer, nbrs, n).min(axis=1)
    base_paths = []
    for v in range(1, n):
        path = [v]
        while path[-1] != 0:
            path.append(int(parent[path[-1]]))
        path.reverse()
        base_paths.append(tuple(path))
    return RotationRouting(spec, tuple(base_paths))


def load_profile(routing: Routing | RotationRouting) -> LoadProfile:
    """Vertex and edge load counts of a routing."""
    if isinstance(routing, RotationRouting):
        vertex_loads = routing.vertex_loads()
        edge_loads = routing.edge_loads()
    else:
        vertex_loads = np.zeros(routing.n, dtype=np.int64)
        edge_loads: dict[tuple[int, int], int] = {}
        for path in routing.paths.values():
            for v in path[1:-1]:
                vertex_loads[v] += 1
            for u, v in zip(path, path[1:]):
                key = (min(u, v), max(u, v))
                edge_loads[key] = edge_loads.get(key, 0) + 1
    return LoadProfile(
        vertex_loads=vertex_loads,
        edge_loads=edge_loads,
        max_vertex_load=int(vertex_loads.max()) if len(vertex_loads) else 0,
        max_edge_load=max(edge_loads.values(), default=0),
    )


def vertex_forwarding_index(
    spec: CirculantSpec, dv: DistanceVector | None = None
) -> int:
    """Exact vertex-forwarding index of a connected circulant:
    transmission - (n - 1), attained by any minimal routing."""
    if dv is None:
        dv = distance_vector(spec)
    return dv.transmission - (spec.n - 1)


def edge_forwarding_bounds(
    spec: CirculantSpec, dv: DistanceVector | None = None
) -> tuple[Fraction, int]:
    """(lower, upper) bounds for the edge-forwarding index of a connected
    r-regular circulant: 2*rho/r and n + rho - (2r - 1)."""
    if dv is None:
        dv = distance_vector(spec)
    rho = dv.transmission
    r = dv.degree
    return Fraction(2 * rho, r), spec.n + rho - (2 * r - 1)
