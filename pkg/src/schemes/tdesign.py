"""Multiaccess D2D schemes whose access topology is a t-design.

Cache nodes are the points of the design and users are its blocks. Packet
rows are indexed by (D, T): an i-subset D of points and a w-subset T of
block positions. Two variants differ in the width w:

* ``thm5``: w = t - i, every label is a t-set,
* ``cor1``: w = t - 1, labels are (i + t - 1)-sets; validity depends on the
  design and is left to the checker.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from ..arrays import CodedArray, SchemeMetrics, SenderMap, closed_form_metrics, scheme_metrics_from_dpda
from ..designs import Design, DesignParams, lambda_closed_form
from ..errors import InvalidParametersError
from ..utils.combinatorics import binom
from ..utils.timing import Timer
from .bundle import SchemeBundle, original_d2d_bundle
from .common import OccurrenceCounter, checked_dpda, require_int
from .placement import AccessTopology, PlacementArray

logger = logging.getLogger(__name__)

THM5 = 'thm5'
COR1 = 'cor1'
VARIANTS = (THM5, COR1)

RowKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _strength(design: Design, t: Optional[int]) -> int:
    if t is not None:
        return t
    if design.declared is None:
        raise InvalidParametersError("the design declares no strength, pass t explicitly")
    return design.declared.t


def row_width(t: int, i: int, k: int, variant: str) -> int:
    """Sub-split width w, after checking i against the variant's range."""
    if variant == THM5:
        if not 1 <= i <= t - 1:
            raise InvalidParametersError(f"thm5 needs 1 <= i <= t-1, got i={i}, t={t}")
        return t - i
    if variant == COR1:
        if not 1 <= i <= min(t, k - t + 1):
            raise InvalidParametersError(
                f"cor1 needs 1 <= i <= min(t, k-t+1)={min(t, k - t + 1)}, got i={i}")
        return t - 1
    raise InvalidParametersError(f"unknown variant '{variant}', choose from {VARIANTS}")


def _rows(design: Design, i: int, w: int) -> List[RowKey]:
    k = design.k
    return [(D, T) for D in combinations(design.points, i) for T in combinations(range(k), w)]


def tdesign_placement(design: Design, i: int, variant: str = THM5,
                      t: Optional[int] = None) -> PlacementArray:
    """
    Star at ((D, T), x) iff x is in D.

    Args:
        design: A t-(v,k,lambda) design
        i: Size of the point subsets D
        variant: ``thm5`` or ``cor1``, selects the width of T
        t: Strength to use; defaults to the declared strength

    Returns:
        The C(v,i)C(k,w) x v placement array
    """
    t = _strength(design, t)
    if design.k is None:
        raise InvalidParametersError("blocks of a t-design must have equal size")
    w = row_width(t, i, design.k, variant)
    rows = _rows(design, i, w)
    stars = np.array([[x in D for x in design.points] for D, _ in rows], dtype=bool)
    return PlacementArray(stars=stars, row_index=tuple(rows), column_index=design.points)


def tdesign_topology(design: Design) -> AccessTopology:
    return AccessTopology.from_names(design.blocks, design.points)


def _sender_rule(design: Design, t: int, variant: str):
    blocks = [frozenset(block) for block in design.blocks]

    def sender_of(label) -> Optional[int]:
        points = frozenset(label[0])
        for index, block in enumerate(blocks):
            if variant == THM5 and points <= block:
                return index
            if variant == COR1 and len(points & block) >= t:
                return index
        return None

    return sender_of


def tdesign_delivery(design: Design, i: int, variant: str = THM5,
                     t: Optional[int] = None) -> Tuple[CodedArray, SenderMap]:
    """
    Delivery array and sender map of the t-design scheme.

    Cell ((D, T), A) is a star when A meets D, otherwise the label
    (D + A(T), alpha) where A(T) are the points of A at the positions T and
    alpha numbers the occurrences of that set inside the rows of D. The
    sender of a label is the first block holding the whole set (``thm5``)
    or at least t of its points (``cor1``).

    Raises:
        ConstructionUnsupportedError: if the array fails the checker
    """
    t = _strength(design, t)
    if design.k is None:
        raise InvalidParametersError("blocks of a t-design must have equal size")
    w = row_width(t, i, design.k, variant)
    counter = OccurrenceCounter()
    grid = []
    with Timer() as timer:
        for D, T in _rows(design, i, w):
            row = []
            for block in design.blocks:
                if set(block) & set(D):
                    row.append(None)
                    continue
                raw = tuple(sorted(set(D) | {block[pos] for pos in T}))
                row.append((raw, counter.next(D, raw)))
            grid.append(row)
        arr, phi = checked_dpda(grid, _sender_rule(design, t, variant),
                                f"t-design {variant} i={i}")
    logger.info("t-design delivery %dx%d built in %.3fs", arr.F, arr.K, timer.elapsed)
    return arr, phi


def tdesign_metrics(v: int, k: int, lam: int, t: int, i: int, variant: str = THM5) -> SchemeMetrics:
    """
    Closed forms of the multiaccess t-design scheme.

    Returns:
        Metrics with Gamma = v, L = k, M/N = i/v and R = S/F
    """
    if not 1 <= t <= k <= v:
        raise InvalidParametersError(f"need 1 <= t <= k <= v, got t={t}, k={k}, v={v}")
    w = row_width(t, i, k, variant)
    K = require_int(Fraction(lam * binom(v, t), binom(k, t)), "K")
    F = binom(v, i) * binom(k, w)
    Z = (binom(v, i) - binom(v - k, i)) * binom(k, w)
    size = t if variant == THM5 else i + t - 1
    S = require_int(Fraction(lam * binom(v, size) * binom(v - size, k - size + i), binom(v - t, k - t)), "S")
    z_cache = binom(v - 1, i - 1) * binom(k, w)
    return closed_form_metrics(K=K, F=F, Z=Z, S=S, gamma=v, L=k, z_cache=z_cache)


def tdesign_scheme(design: Design, i: int, variant: str = THM5,
                   t: Optional[int] = None) -> SchemeBundle:
    """Multiaccess bundle with metrics measured from the constructed arrays."""
    placement = tdesign_placement(design, i, variant, t)
    topology = tdesign_topology(design)
    arr, phi = tdesign_delivery(design, i, variant, t)
    metrics = scheme_metrics_from_dpda(arr, phi, gamma=placement.gamma, L=topology.L,
                                       z_cache=placement.z)
    return SchemeBundle(kind=f"tdesign-{variant}", placement=placement, topology=topology,
                        delivery=arr, phi=phi, metrics=metrics)


def tdesign_d2d_scheme(design: Design, i: int, variant: str = THM5,
                       t: Optional[int] = None) -> SchemeBundle:
    """The same delivery array read as an original D2D DPDA."""
    arr, phi = tdesign_delivery(design, i, variant, t)
    return original_d2d_bundle(arr, phi, kind=f"tdesign-{variant}-d2d")


def tdesign_d2d_metrics(v: int, k: int, lam: int, t: int, i: int, variant: str = THM5) -> SchemeMetrics:
    """Original D2D reading: Gamma = K, L = 1, M/N = 1 - C(v-k,i)/C(v,i)."""
    base = tdesign_metrics(v, k, lam, t, i, variant)
    return closed_form_metrics(K=base.K, F=base.F, Z=base.Z, S=base.S, gamma=base.K, L=1, z_cache=base.Z)


def declared_params(design: Design, t: Optional[int] = None) -> DesignParams:
    """
    Declared parameters, re-read at a lower strength when ``t`` is given.

    A t-(v,k,lambda) design is also an s-design for every s <= t.
    """
    if design.declared is None:
        raise InvalidParametersError("the design declares no t-(v,k,lambda) parameters")
    declared = design.declared
    if t is None or t == declared.t:
        return declared
    if not 1 <= t < declared.t:
        raise InvalidParametersError(f"strength t={t} must lie in 1..{declared.t}")
    lam = lambda_closed_form(declared.v, declared.k, declared.lam, declared.t, t, 0)
    return DesignParams(t=t, v=declared.v, k=declared.k, lam=require_int(lam, 'lambda'))
