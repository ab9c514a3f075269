"""Multiaccess D2D schemes whose access topology is a t-GDD.

Cache nodes are the points (u, v) of a t-(m,q,k,1) GDD and users are its
blocks. Packet rows are indexed by (D, T), where D is a row of an s-(q,m,1)
orthogonal array and T an l-subset of block positions; cache (u, v) stores
the rows with D(u) = v.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Tuple

import numpy as np

from ..arrays import CodedArray, SchemeMetrics, SenderMap, closed_form_metrics, scheme_metrics_from_dpda
from ..designs import NOT_AN_OA, GroupDivisibleDesign, OrthogonalArray, oa_profile
from ..errors import InvalidParametersError
from ..utils.combinatorics import binom
from ..utils.timing import Timer
from .bundle import SchemeBundle, original_d2d_bundle
from .common import OccurrenceCounter, checked_dpda, require_int
from .placement import AccessTopology, PlacementArray

logger = logging.getLogger(__name__)


def check_ranges(m: int, q: int, k: int, t: int, s: int, l: int) -> None:
    """1 <= t <= k <= s < m and 1 <= l <= min(m-s, t-1)."""
    if q < 2:
        raise InvalidParametersError(f"q must be at least 2, got q={q}")
    if not 1 <= t <= k <= s < m:
        raise InvalidParametersError(f"need 1 <= t <= k <= s < m, got t={t}, k={k}, s={s}, m={m}")
    if not 1 <= l <= min(m - s, t - 1):
        raise InvalidParametersError(f"need 1 <= l <= min(m-s, t-1)={min(m - s, t - 1)}, got l={l}")


def _inputs(gdd: GroupDivisibleDesign, oa: OrthogonalArray, l: int) -> Tuple[int, int, int, int, int]:
    if gdd.t is None or gdd.k is None:
        raise InvalidParametersError("the GDD must declare its strength and have equal block sizes")
    if gdd.lam not in (None, 1):
        raise InvalidParametersError(f"the GDD must have index 1, got lambda={gdd.lam}")
    if oa.columns != gdd.m or oa.q != gdd.q:
        raise InvalidParametersError(
            f"OA is over {oa.q} symbols with {oa.columns} columns, GDD has m={gdd.m}, q={gdd.q}")
    if oa.strength is None:
        raise InvalidParametersError("the orthogonal array must declare its strength")
    index = oa.index if oa.index is not None else oa_profile(oa.rows, oa.q, oa.strength)
    if index != 1:
        detail = 'rows do not form an OA' if index == NOT_AN_OA else f"index {index}"
        raise InvalidParametersError(f"the orthogonal array must have index 1 ({detail})")
    check_ranges(gdd.m, gdd.q, gdd.k, gdd.t, oa.strength, l)
    return gdd.m, gdd.q, gdd.k, gdd.t, oa.strength


def _rows(oa: OrthogonalArray, k: int, l: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    return [(D, T) for D in oa.rows for T in combinations(range(k), l)]


def tgdd_placement(gdd: GroupDivisibleDesign, oa: OrthogonalArray, l: int) -> PlacementArray:
    """Star at ((D, T), (u, v)) iff D(u) = v; q^s C(k,l) rows and mq cache columns."""
    _, _, k, _, _ = _inputs(gdd, oa, l)
    rows = _rows(oa, k, l)
    points = gdd.points
    stars = np.array([[D[u - 1] == v for u, v in points] for D, _ in rows], dtype=bool)
    return PlacementArray(stars=stars, row_index=tuple(rows), column_index=points)


def tgdd_topology(gdd: GroupDivisibleDesign) -> AccessTopology:
    return AccessTopology.from_names(gdd.blocks, gdd.points)


def _sender_rule(gdd: GroupDivisibleDesign, t: int):
    def sender_of(label):
        e = label[0]
        for index, block in enumerate(gdd.blocks):
            if sum(e[u - 1] == v for u, v in block) >= t:
                return index
        return None

    return sender_of


def tgdd_delivery(gdd: GroupDivisibleDesign, oa: OrthogonalArray,
                  l: int) -> Tuple[CodedArray, SenderMap]:
    """
    Delivery array and sender map of the t-GDD scheme.

    User A sees a star in row (D, T) when D agrees with A on one of A's
    groups. Otherwise the label is (e, alpha): e copies D and takes A's
    values on the groups at positions T, and alpha numbers the occurrences
    of e inside the rows of D. The sender is the first user whose block
    agrees with e on at least t groups.

    Raises:
        ConstructionUnsupportedError: if the array fails the checker
    """
    _, _, k, t, _ = _inputs(gdd, oa, l)
    counter = OccurrenceCounter()
    grid = []
    with Timer() as timer:
        for D, T in _rows(oa, k, l):
            row = []
            for block in gdd.blocks:
                if any(D[u - 1] == v for u, v in block):
                    row.append(None)
                    continue
                e = list(D)
                for pos in T:
                    u, v = block[pos]
                    e[u - 1] = v
                e = tuple(e)
                row.append((e, counter.next(D, e)))
            grid.append(row)
        arr, phi = checked_dpda(grid, _sender_rule(gdd, t), f"t-GDD l={l}")
    logger.info("t-GDD delivery %dx%d built in %.3fs", arr.F, arr.K, timer.elapsed)
    return arr, phi


def tgdd_metrics(m: int, q: int, k: int, t: int, s: int, l: int) -> SchemeMetrics:
    """
    Closed forms of the t-GDD scheme.

    S is exact when k = t, s = m-1, l = 1, or when k = t, s = m-t+1 > t,
    l = m-s. Elsewhere S and R are upper bounds and ``exact`` is False.
    """
    check_ranges(m, q, k, t, s, l)
    K = require_int(Fraction(binom(m, t) * q ** t, binom(k, t)), 'K')
    F = q ** s * binom(k, l)
    Z = (q ** s - (q - 1) ** k * q ** (s - k)) * binom(k, l)
    z_cache = q ** (s - 1) * binom(k, l)
    common = dict(K=K, F=F, Z=Z, gamma=m * q, L=k, z_cache=z_cache)
    if k == t and s == m - 1 and l == 1:
        return closed_form_metrics(S=q ** (m - 1) * (q - 1) ** t * binom(m - 1, t - 1), **common)
    if k == t and s == m - t + 1 and s > t and l == m - s:
        return closed_form_metrics(S=(q ** m - q ** (m - t + 1)) * (q - 1) * (m - t + 1), **common)
    bound = Fraction((q ** m - q ** s) * q ** (t - l) * binom(m - l, t - l), binom(k - l, t - l))
    return closed_form_metrics(S=bound.numerator // bound.denominator, load=bound / F,
                               exact=False, **common)


def tgdd_scheme(gdd: GroupDivisibleDesign, oa: OrthogonalArray, l: int) -> SchemeBundle:
    """Multiaccess bundle with metrics measured from the constructed arrays."""
    placement = tgdd_placement(gdd, oa, l)
    topology = tgdd_topology(gdd)
    arr, phi = tgdd_delivery(gdd, oa, l)
    metrics = scheme_metrics_from_dpda(arr, phi, gamma=placement.gamma, L=topology.L,
                                       z_cache=placement.z)
    return SchemeBundle(kind='tgdd', placement=placement, topology=topology,
                        delivery=arr, phi=phi, metrics=metrics)


def tgdd_d2d_scheme(gdd: GroupDivisibleDesign, oa: OrthogonalArray, l: int) -> SchemeBundle:
    arr, phi = tgdd_delivery(gdd, oa, l)
    return original_d2d_bundle(arr, phi, kind='tgdd-d2d')


def tgdd_d2d_metrics(m: int, q: int, k: int, t: int, s: int, l: int) -> SchemeMetrics:
    """Original D2D reading: M/N = 1 - ((q-1)/q)^k."""
    base = tgdd_metrics(m, q, k, t, s, l)
    return closed_form_metrics(K=base.K, F=base.F, Z=base.Z, S=base.S, gamma=base.K, L=1,
                               z_cache=base.Z, load=base.load, exact=base.exact)
