"""Original D2D schemes: one cache per user, placement read off the DPDA."""

import logging
from dataclasses import replace
from fractions import Fraction
from typing import Tuple

from ..arrays import CodedArray, SchemeMetrics, SenderMap, closed_form_metrics
from ..designs import complete_design, proper_oa, trivial_gdd
from ..errors import InvalidParametersError, OutOfRangeError
from ..utils.combinatorics import binom
from ..utils.timing import Timer
from .bundle import SchemeBundle, original_d2d_bundle
from .common import OccurrenceCounter, checked_dpda
from .tdesign import THM5, tdesign_d2d_metrics, tdesign_delivery
from .tgdd import tgdd_d2d_metrics, tgdd_d2d_scheme

logger = logging.getLogger(__name__)

FAMILY_I = 'i'
FAMILY_J = 'j'


def _check_gdd_params(m: int, q: int, t: int) -> None:
    if not 1 < t < m or q < 2:
        raise InvalidParametersError(f"need 1 < t < m and q >= 2, got m={m}, q={q}, t={t}")


def thm9_dpda(m: int, q: int, t: int) -> Tuple[CodedArray, SenderMap]:
    """
    DPDA with the blocks of the trivial t-GDD as rows and the proper OA as
    users.

    Row A and user D meet in a star when D agrees with A on one of A's
    groups. Otherwise the label is (e, alpha) where e takes A's values on
    A's groups and D's values elsewhere, alpha counting occurrences of e
    from left to right in the row. The sender is the first OA row within
    Hamming distance 1 of e.
    """
    _check_gdd_params(m, q, t)
    gdd = trivial_gdd(m, q, t)
    oa = proper_oa(q, m)
    counter = OccurrenceCounter()
    grid = []
    with Timer() as timer:
        for block in gdd.blocks:
            row = []
            for D in oa.rows:
                if any(D[u - 1] == v for u, v in block):
                    row.append(None)
                    continue
                e = list(D)
                for u, v in block:
                    e[u - 1] = v
                e = tuple(e)
                row.append((e, counter.next(block, e)))
            grid.append(row)

        def sender_of(label):
            e = label[0]
            for index, D in enumerate(oa.rows):
                if sum(a != b for a, b in zip(D, e)) <= 1:
                    return index
            return None

        arr, phi = checked_dpda(grid, sender_of, f"thm9 m={m} q={q} t={t}")
    logger.info("thm9 DPDA %dx%d built in %.3fs", arr.F, arr.K, timer.elapsed)
    return arr, phi


def thm9_metrics(m: int, q: int, t: int) -> SchemeMetrics:
    """(q^(m-1), C(m,t)q^t, (q^t-(q-1)^t)C(m,t), (q-1)^t q^(m-1))."""
    _check_gdd_params(m, q, t)
    K = q ** (m - 1)
    Z = (q ** t - (q - 1) ** t) * binom(m, t)
    return closed_form_metrics(K=K, F=binom(m, t) * q ** t, Z=Z, S=(q - 1) ** t * q ** (m - 1),
                               gamma=K, L=1, z_cache=Z)


def thm9_scheme(m: int, q: int, t: int) -> SchemeBundle:
    arr, phi = thm9_dpda(m, q, t)
    return original_d2d_bundle(arr, phi, kind='thm9')


def _family_design(n: int, k: int, family: str, idx: int):
    """(block size, strength, lambda) of the complete design behind a family."""
    if k < 1 or 2 * k > n:
        raise InvalidParametersError(f"need 1 <= k <= n/2, got n={n}, k={k}")
    if family == FAMILY_I:
        if not 1 <= idx <= k - 2:
            raise InvalidParametersError(f"family i needs 1 <= idx <= k-2={k - 2}, got idx={idx}")
        block, t = k, k - 1
    elif family == FAMILY_J:
        top = min(n - k - 2, k)
        if not 1 <= idx <= top:
            raise InvalidParametersError(f"family j needs 1 <= idx <= min(n-k-2, k)={top}, got idx={idx}")
        block, t = n - k, k + 1
        if t > block:
            raise InvalidParametersError(f"family j needs n-k >= k+1, got n={n}, k={k}")
    else:
        raise InvalidParametersError(f"family must be '{FAMILY_I}' or '{FAMILY_J}', got '{family}'")
    return block, t, binom(n - t, block - t)


def complete_family_scheme(n: int, k: int, family: str, idx: int) -> SchemeBundle:
    """
    The t-design D2D scheme on a complete design.

    Family i uses the k-subsets of [n] at strength k-1; family j uses the
    (n-k)-subsets at strength k+1. Metrics are measured from the array.
    """
    block, t, _ = _family_design(n, k, family, idx)
    arr, phi = tdesign_delivery(complete_design(n, block), idx, THM5, t=t)
    return original_d2d_bundle(arr, phi, kind=f"cor4-{family}")


def _printed_j_metrics(n: int, k: int, j: int) -> SchemeMetrics:
    F = binom(n, j) * binom(n - k, k - j - 1)
    if F == 0 or binom(k - 1, j) == 0:
        raise OutOfRangeError(f"the printed family-j formulas vanish at n={n}, k={k}, j={j}")
    load = Fraction(binom(n - j, k - j), binom(k - 1, j))
    ratio = 1 - Fraction(binom(k, j), binom(n, j))
    Z, S = ratio * F, load * F
    if Z.denominator != 1 or S.denominator != 1:
        raise OutOfRangeError(f"the printed family-j formulas give Z={Z}, S={S} at n={n}, k={k}, j={j}")
    K = binom(n, k)
    return closed_form_metrics(K=K, F=F, Z=int(Z), S=int(S), gamma=K, L=1, z_cache=int(Z), load=load)


def complete_family_metrics(n: int, k: int, family: str, idx: int,
                            as_printed: bool = False) -> SchemeMetrics:
    """
    Closed forms of the complete-design family.

    With ``as_printed`` the j-family uses the formulas as originally stated
    (strength k-1), which disagree with the constructed arrays.
    """
    block, t, lam = _family_design(n, k, family, idx)
    if as_printed and family == FAMILY_J:
        return _printed_j_metrics(n, k, idx)
    return tdesign_d2d_metrics(n, block, lam, t, idx, THM5)


def cor5_scheme(m: int, q: int, t: int) -> SchemeBundle:
    """t-GDD D2D scheme on the trivial GDD and the proper OA (k=t, s=m-1, l=1)."""
    _check_gdd_params(m, q, t)
    bundle = tgdd_d2d_scheme(trivial_gdd(m, q, t), proper_oa(q, m), 1)
    return replace(bundle, kind='cor5')


def cor5_metrics(m: int, q: int, t: int) -> SchemeMetrics:
    _check_gdd_params(m, q, t)
    return tgdd_d2d_metrics(m, q, t, t, m - 1, 1)
