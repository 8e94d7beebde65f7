"""Distance-based topological indices.

Seventeen indices in four groups: purely distance-based sums over vertex
pairs (Wiener, hyper-Wiener, Harary), degree-and-distance pair sums
(Schultz, Gutman, weighted Hararys), and per-edge sums driven by endpoint
transmissions respectively reciprocal transmissions (GA, AG, SC, ABC, AZ
kernels).

Pair-sum indices and both augmented-Zagreb variants are exact rationals.
The square-root kernels are accumulated in binary64 after grouping edges by
endpoint statistics, with ``math.fsum`` over the group contributions; the
GA/AG pairs collapse to the exact edge count on transmission-regular
graphs, and the report keeps those exact values alongside the floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .core import GenericGraph
from .errors import (
    DegenerateReciprocalTransmissionError,
    DegenerateTransmissionError,
    DisconnectedGraphError,
)
from .metrics import DistanceVector, all_pairs_distances, reciprocal_sum

PAIR_FIELDS = (
    "wiener",
    "hyper_wiener",
    "harary",
    "schultz",
    "gutman",
    "harary_additive",
    "harary_multiplicative",
)
TRANSMISSION_FIELDS = ("t_ga", "t_ag", "t_sc", "t_abc", "t_az")
RECIPROCAL_FIELDS = ("rt_ga", "rt_ag", "rt_sc", "rt_abc", "rt_az")
INDEX_FIELDS = PAIR_FIELDS + TRANSMISSION_FIELDS + RECIPROCAL_FIELDS


@dataclass(frozen=True)
class PairIndices:
    """Indices summed over unordered vertex pairs (all exact)."""

    wiener: Fraction
    hyper_wiener: Fraction
    harary: Fraction
    schultz: Fraction
    gutman: Fraction
    harary_additive: Fraction
    harary_multiplicative: Fraction


@dataclass(frozen=True)
class TransmissionIndices:
    """Per-edge indices driven by endpoint transmissions."""

    t_ga: float
    t_ag: float
    t_sc: float
    t_abc: float
    t_az: float
    exact: Mapping[str, Fraction]


@dataclass(frozen=True)
class ReciprocalTransmissionIndices:
    """Per-edge indices driven by endpoint reciprocal transmissions."""

    rt_ga: float
    rt_ag: float
    rt_sc: float
    rt_abc: float
    rt_az: float
    exact: Mapping[str, Fraction]


@dataclass(frozen=True)
class IndexReport:
    """All seventeen index values plus the provably-exact subset."""

    wiener: Fraction
    hyper_wiener: Fraction
    harary: Fraction
    schultz: Fraction
    gutman: Fraction
    harary_additive: Fraction
    harary_multiplicative: Fraction
    t_ga: float
    t_ag: float
    t_sc: float
    t_abc: float
    t_az: float
    rt_ga: float
    rt_ag: float
    rt_sc: float
    rt_abc: float
    rt_az: float
    exact: Mapping[str, Fraction]


def _require_connected(dist: np.ndarray) -> None:
    if (dist < 0).any():
        raise DisconnectedGraphError("indices are defined for connected graphs only")


def _pair_indices_from_stats(
    cnt: list[int], dsum: list[int], dprod: list[int]
) -> PairIndices:
    wiener = 0
    sumsq = 0
    schultz = 0
    gutman = 0
    harary = Fraction(0)
    har_add = Fraction(0)
    har_mul = Fraction(0)
    for d in range(1, len(cnt)):
        c = cnt[d]
        if not c and not dsum[d] and not dprod[d]:
            continue
        wiener += d * c
        sumsq += d * d * c
        schultz += d * dsum[d]
        gutman += d * dprod[d]
        harary += Fraction(c, d)
        har_add += Fraction(dsum[d], d)
        har_mul += Fraction(dprod[d], d)
    return PairIndices(
        wiener=Fraction(wiener),
        hyper_wiener=Fraction(wiener + sumsq, 2),
        harary=harary,
        schultz=Fraction(schultz),
        gutman=Fraction(gutman),
        harary_additive=har_add,
        harary_multiplicative=har_mul,
    )


def _pair_stats_from_matrix(
    dist: np.ndarray, deg: np.ndarray
) -> tuple[list[int], list[int], list[int]]:
    n = dist.shape[0]
    maxd = int(dist.max()) if n > 1 else 0
    cnt = np.zeros(maxd + 1, dtype=np.int64)
    dsum = np.zeros(maxd + 1, dtype=np.int64)
    dprod = np.zeros(maxd + 1, dtype=np.int64)
    for i in range(n - 1):
        row = dist[i, i + 1 :]
        cnt += np.bincount(row, minlength=maxd + 1)
        np.add.at(dsum, row, deg[i] + deg[i + 1 :])
        np.add.at(dprod, row, deg[i] * deg[i + 1 :])
    return cnt.tolist(), dsum.tolist(), dprod.tolist()


def _edge_sigma_groups(
    dist: np.ndarray, edges: np.ndarray
) -> dict[tuple[int, int], int]:
    sig = dist.sum(axis=1)
    a = sig[edges[:, 0]]
    b = sig[edges[:, 1]]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    width = int(sig.max()) + 1
    keys, counts = np.unique(lo * width + hi, return_counts=True)
    return {
        (int(k // width), int(k % width)): int(c) for k, c in zip(keys, counts)
    }


def _edge_rs_groups(
    dist: np.ndarray, edges: np.ndarray
) -> dict[tuple[Fraction, Fraction], int]:
    n = dist.shape[0]
    rs_by_vertex = [reciprocal_sum(np.bincount(dist[i])) for i in range(n)]
    ids: dict[Fraction, int] = {}
    vid = np.empty(n, dtype=np.int64)
    for i, value in enumerate(rs_by_vertex):
        vid[i] = ids.setdefault(value, len(ids))
    values = list(ids)
    a = vid[edges[:, 0]]
    b = vid[edges[:, 1]]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    width = len(values)
    keys, counts = np.unique(lo * width + hi, return_counts=True)
    return {
        (values[int(k // width)], values[int(k % width)]): int(c)
        for k, c in zip(keys, counts)
    }


def _transmission_from_groups(
    groups: dict[tuple[int, int], int]
) -> TransmissionIndices:
    ga_terms, ag_terms, sc_terms, abc_terms, az_terms = [], [], [], [], []
    az = Fraction(0)
    for (a, b), count in sorted(groups.items()):
        s = a + b
        if s <= 2:
            raise DegenerateTransmissionError(
                f"edge transmissions {a} + {b} do not exceed 2"
            )
        p = a * b
        root = math.sqrt(a) * math.sqrt(b)
        ga_terms.append(count * 2.0 * root / s)
        ag_terms.append(count * s / (2.0 * root))
        sc_terms.append(count / math.sqrt(s))
        abc_terms.append(count * math.sqrt((s - 2) / p))
        az_group = count * Fraction(p, s - 2) ** 3
        az += az_group
        az_terms.append(float(az_group))
    exact: dict[str, Fraction] = {"t_az": az}
    edge_total = sum(groups.values())
    if len(groups) == 1 and next(iter(groups))[0] == next(iter(groups))[1]:
        # transmission-regular: every GA/AG term is exactly 1
        exact["t_ga"] = Fraction(edge_total)
        exact["t_ag"] = Fraction(edge_total)
    return TransmissionIndices(
        t_ga=math.fsum(ga_terms),
        t_ag=math.fsum(ag_terms),
        t_sc=math.fsum(sc_terms),
        t_abc=math.fsum(abc_terms),
        t_az=math.fsum(az_terms),
        exact=exact,
    )


def _reciprocal_from_groups(
    groups: dict[tuple[Fraction, Fraction], int]
) -> ReciprocalTransmissionIndices:
    ga_terms, ag_terms, sc_terms, abc_terms, az_terms = [], [], [], [], []
    az = Fraction(0)
    for (a, b), count in sorted(groups.items()):
        s = a + b
        if s <= 2:
            raise DegenerateReciprocalTransmissionError(
                f"edge reciprocal transmissions {a} + {b} do not exceed 2"
            )
        p = a * b
        root = math.sqrt(a) * math.sqrt(b)
        fs = float(s)
        ga_terms.append(count * 2.0 * root / fs)
        ag_terms.append(count * fs / (2.0 * root))
        sc_terms.append(count / math.sqrt(fs))
        abc_terms.append(count * math.sqrt(float((s - 2) / p)))
        az_group = count * (p / (s - 2)) ** 3
        az += az_group
        az_terms.append(float(az_group))
    exact: dict[str, Fraction] = {"rt_az": az}
    edge_total = sum(groups.values())
    if len(groups) == 1 and next(iter(groups))[0] == next(iter(groups))[1]:
        exact["rt_ga"] = Fraction(edge_total)
        exact["rt_ag"] = Fraction(edge_total)
    return ReciprocalTransmissionIndices(
        rt_ga=math.fsum(ga_terms),
        rt_ag=math.fsum(ag_terms),
        rt_sc=math.fsum(sc_terms),
        rt_abc=math.fsum(abc_terms),
        rt_az=math.fsum(az_terms),
        exact=exact,
    )


def pair_indices(g: GenericGraph, *, _dist: np.ndarray | None = None) -> PairIndices:
    """Wiener, hyper-Wiener, Harary, Schultz, Gutman, and both weighted
    Harary indices from all-pairs BFS distances."""
    dist = all_pairs_distances(g) if _dist is None else _dist
    _require_connected(dist)
    cnt, dsum, dprod = _pair_stats_from_matrix(dist, g.degrees())
    return _pair_indices_from_stats(cnt, dsum, dprod)


def transmission_indices(
    g: GenericGraph, *, _dist: np.ndarray | None = None
) -> TransmissionIndices:
    """GA/AG/SC/ABC/AZ edge sums over endpoint transmissions."""
    dist = all_pairs_distances(g) if _dist is None else _dist
    _require_connected(dist)
    return _transmission_from_groups(_edge_sigma_groups(dist, g.edges()))


def reciprocal_transmission_indices(
    g: GenericGraph, *, _dist: np.ndarray | None = None
) -> ReciprocalTransmissionIndices:
    """GA/AG/SC/ABC/AZ edge sums over endpoint reciprocal transmissions."""
    dist = all_pairs_distances(g) if _dist is None else _dist
    _require_connected(dist)
    return _reciprocal_from_groups(_edge_rs_groups(dist, g.edges()))


def _assemble(
    pair: PairIndices,
    trans: TransmissionIndices,
    recip: ReciprocalTransmissionIndices,
) -> IndexReport:
    exact = dict(trans.exact)
    exact.update(recip.exact)
    return IndexReport(
        wiener=pair.wiener,
        hyper_wiener=pair.hyper_wiener,
        harary=pair.harary,
        schultz=pair.schultz,
        gutman=pair.gutman,
        harary_additive=pair.harary_additive,
        harary_multiplicative=pair.harary_multiplicative,
        t_ga=trans.t_ga,
        t_ag=trans.t_ag,
        t_sc=trans.t_sc,
        t_abc=trans.t_abc,
        t_az=trans.t_az,
        rt_ga=recip.rt_ga,
        rt_ag=recip.rt_ag,
        rt_sc=recip.rt_sc,
        rt_abc=recip.rt_abc,
        rt_az=recip.rt_az,
        exact=exact,
    )


def full_report(g: GenericGraph) -> IndexReport:
    """All seventeen indices of a connected graph, sharing one all-pairs
    BFS pass."""
    dist = all_pairs_distances(g)
    _require_connected(dist)
    return _assemble(
        pair_indices(g, _dist=dist),
        transmission_indices(g, _dist=dist),
        reciprocal_transmission_indices(g, _dist=dist),
    )


def report_from_distance_vector(dv: DistanceVector) -> IndexReport:
    """All seventeen indices of a connected circulant from its distance
    vector.

    The distance matrix of a circulant is the rotation expansion of its
    first row, so every row shares the distance multiset of ``dv``; the
    unordered-pair count at distance d is n * count[d] / 2 and the graph is
    transmission-regular.
    """
    n = dv.n
    counts = dv.distance_counts().tolist()
    r = dv.degree
    edge_total = n * r // 2
    cnt = [0] * len(counts)
    dsum = [0] * len(counts)
    dprod = [0] * len(counts)
    for d in range(1, len(counts)):
        pairs = n * counts[d] // 2
        cnt[d] = pairs
        dsum[d] = 2 * r * pairs
        dprod[d] = r * r * pairs
    pair = _pair_indices_from_stats(cnt, dsum, dprod)
    sigma = dv.transmission
    trans = _transmission_from_groups({(sigma, sigma): edge_total})
    rs = dv.reciprocal_transmission
    recip = _reciprocal_from_groups({(rs, rs): edge_total})
    return _assemble(pair, trans, recip)
