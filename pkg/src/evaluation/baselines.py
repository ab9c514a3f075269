"""Closed-form parameters of the schemes the constructions are compared with."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from ..arrays import SchemeMetrics
from ..errors import InvalidParametersError, NotApplicableError
from ..schemes.common import require_int
from ..utils.combinatorics import binom


@dataclass(frozen=True)
class ComparisonRow:
    """One row of a comparison table; every ratio is exact."""

    scheme: str
    gamma: int
    memory_ratio: Fraction
    K: int
    L: int
    load: Fraction
    F: int
    exact: bool = True

    @property
    def per_user_load(self) -> Fraction:
        return self.load / self.K

    def key(self):
        """(K, F, M/N, R), the fields cross-checked against constructions."""
        return self.K, self.F, self.memory_ratio, self.load


def row_from_metrics(scheme: str, metrics: SchemeMetrics) -> ComparisonRow:
    return ComparisonRow(scheme=scheme, gamma=metrics.gamma, memory_ratio=metrics.memory_ratio,
                         K=metrics.K, L=metrics.L, load=metrics.load, F=metrics.F, exact=metrics.exact)


def wccwc_metrics(K0: int, t0: int, r: int) -> ComparisonRow:
    """Multiaccess D2D scheme on the cyclic wrap-around topology."""
    if r <= 1:
        raise InvalidParametersError(f"cyclic topology needs r > 1, got r={r}")
    if not 1 <= t0 <= K0:
        raise InvalidParametersError(f"need 1 <= t0 <= K0, got K0={K0}, t0={t0}")
    K = (r - 1) * K0 + t0
    return ComparisonRow(scheme='wccwc', gamma=K, memory_ratio=Fraction(t0, K), K=K, L=r,
                         load=Fraction((K0 - t0) * (r - 1), t0), F=binom(K0, t0) * t0 * K)


def cweg_tdesign_metrics(v: int, k: int, t: int) -> ComparisonRow:
    """Derived scheme on a t-(v,k,1) design topology (transformed user-retrieve PDA)."""
    if not 1 <= t <= k < v:
        raise InvalidParametersError(f"need 1 <= t <= k < v, got t={t}, k={k}, v={v}")
    K = require_int(Fraction(binom(v, t), binom(k, t)), 'K')
    return ComparisonRow(scheme='derived-cweg-tdesign', gamma=v, memory_ratio=Fraction(1, v), K=K, L=k,
                         load=Fraction(binom(v - 1, k), binom(v - t, k - t) * t), F=v * t * binom(k, t))


def cweg_tgdd_metrics(m: int, q: int, t: int) -> ComparisonRow:
    """Derived scheme on a t-(m,q,t,1) GDD topology."""
    if not 1 <= t < m or q < 2:
        raise InvalidParametersError(f"need 1 <= t < m and q >= 2, got m={m}, q={q}, t={t}")
    groups = binom(m, t)
    if groups == 1:
        raise InvalidParametersError(f"C(m,t)=1 leaves nothing to transform at m={m}, t={t}")
    return ComparisonRow(scheme='derived-cweg-tgdd', gamma=m * q, memory_ratio=Fraction(1, q),
                         K=groups * q ** t, L=t, load=Fraction(groups * (q - 1) ** t, groups - 1),
                         F=(groups - 1) * q ** (m - 1))


def jcm_metrics(K: int, memory_ratio: Fraction, scheme: str = 'jcm') -> ComparisonRow:
    """
    The D2D scheme of Ji, Caire and Molisch at an integer point t' = K M/N.

    Raises:
        NotApplicableError: if K M/N is not an integer in 1..K
    """
    memory_ratio = Fraction(memory_ratio)
    point = memory_ratio * K
    if point.denominator != 1 or not 1 <= point <= K:
        raise NotApplicableError(f"K*M/N={point} is not an integer in 1..{K}; use memory sharing")
    point = int(point)
    return ComparisonRow(scheme=scheme, gamma=K, memory_ratio=memory_ratio, K=K, L=1,
                         load=(1 - memory_ratio) / memory_ratio, F=point * binom(K, point))


def jcm_tdesign_metrics(v: int, k: int, lam: int, t: int, i: int) -> ComparisonRow:
    """JCM at the K and M/N of the t-design D2D scheme."""
    K = require_int(Fraction(lam * binom(v, t), binom(k, t)), 'K')
    return jcm_metrics(K, 1 - Fraction(binom(v - k, i), binom(v, i)), scheme='jcm-tdesign')


def jcm_tgdd_metrics(m: int, q: int, t: int) -> ComparisonRow:
    """JCM at K = C(m,t)q^t and M/N = 1 - ((q-1)/q)^t."""
    if not 1 < t < m or q < 2:
        raise InvalidParametersError(f"need 1 < t < m and q >= 2, got m={m}, q={q}, t={t}")
    return jcm_metrics(binom(m, t) * q ** t, 1 - Fraction(q - 1, q) ** t, scheme='jcm-tgdd')


def transformed_pda_metrics(K: int, F: int, Z: int, S: int, g: int,
                            scheme: str = 'transformed-pda') -> ComparisonRow:
    """
    D2D scheme from a g+1 regular (K,F,Z,S) PDA through the (K,gF,gZ,(g+1)S)
    DPDA transform: M/N = Z/F, subpacketization gF, R = (g+1)S/(gF).
    """
    if g < 1:
        raise InvalidParametersError(f"the transform needs g >= 1, got g={g}")
    return ComparisonRow(scheme=scheme, gamma=K, memory_ratio=Fraction(Z, F), K=K, L=1,
                         load=Fraction((g + 1) * S, g * F), F=g * F)


def tdesign_pda_baseline(v: int, k: int, t: int) -> ComparisonRow:
    """Transform of the (t+1)-regular user-retrieve PDA of a t-(v,k,1) design at i=1."""
    K = require_int(Fraction(binom(v, t), binom(k, t)), 'K')
    S = binom(v, t + 1) - K * binom(k, t + 1)
    return transformed_pda_metrics(K, v * binom(k, t), k * binom(k, t), S, t,
                                   scheme='transformed-tdesign-pda')


def tgdd_pda_baselines(m: int, q: int, t: int) -> List[ComparisonRow]:
    """
    Transforms of the two C(m,t)-regular PDAs with K = C(m,t)q^t: one with
    q^m rows and one with q^(m-1) rows.
    """
    if not 1 <= t < m or q < 2:
        raise InvalidParametersError(f"need 1 <= t < m and q >= 2, got m={m}, q={q}, t={t}")
    groups = binom(m, t)
    if groups == 1:
        raise InvalidParametersError(f"C(m,t)=1 gives a 1-regular PDA at m={m}, t={t}")
    K = groups * q ** t
    rows = []
    for name, F in (('transformed-tgdd-pda', q ** m), ('transformed-tgdd-pda-reduced', q ** (m - 1))):
        Z = F - F // q ** t * (q - 1) ** t
        rows.append(transformed_pda_metrics(K, F, Z, F * (q - 1) ** t, groups - 1, scheme=name))
    return rows


def table1_wccwc(v: int, r: int) -> ComparisonRow:
    """WCCWC with t0 = 1 and K0 = (v-1)/(r-1), matching Gamma = v."""
    if r <= 1:
        raise InvalidParametersError(f"cyclic topology needs r > 1, got r={r}")
    return wccwc_metrics(require_int(Fraction(v - 1, r - 1), 'K0'), 1, r)


def table2_wccwc(m: int, q: int, r: int) -> ComparisonRow:
    """WCCWC with t0 = m and K0 = m(q-1)/(r-1), matching Gamma = mq."""
    if r <= 1:
        raise InvalidParametersError(f"cyclic topology needs r > 1, got r={r}")
    K0 = require_int(Fraction(m * (q - 1), r - 1), 'K0')
    if K0 < m:
        raise InvalidParametersError(f"K0={K0} must be at least m={m}")
    return wccwc_metrics(K0, m, r)


def maybe(row_builder, *args) -> Optional[ComparisonRow]:
    """Row or None when the baseline does not apply at these parameters."""
    try:
        return row_builder(*args)
    except NotApplicableError:
        return None
