"""Scheme parameters derived from a DPDA or from closed forms."""

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from ..errors import MalformedInputError, PreconditionFailedError
from ..utils.combinatorics import format_fraction, parse_fraction
from .checks import verify_dpda
from .coded_array import CodedArray, SenderMap

_INT_FIELDS = ('K', 'F', 'Z', 'S', 'gamma', 'L', 'z_cache')
_RATIO_FIELDS = ('memory_ratio', 'load')


@dataclass(frozen=True)
class SchemeMetrics:
    """
    (K, F, Z, S) of the delivery array together with the cache side.

    ``Z`` counts stars per user column of the delivery array, ``z_cache``
    counts stars per cache column of the placement array (equal to ``Z`` in
    the original D2D setting, where every user is its own cache). When
    ``exact`` is False, ``S`` and ``load`` are upper bounds.
    """

    K: int
    F: int
    Z: int
    S: int
    gamma: int
    L: int
    z_cache: int
    memory_ratio: Fraction
    load: Fraction
    exact: bool = True

    @property
    def per_user_load(self) -> Fraction:
        return self.load / self.K

    @property
    def params(self):
        return self.K, self.F, self.Z, self.S

    def summary(self) -> str:
        relation = '=' if self.exact else '<='
        return (f"K={self.K} F={self.F} Z={self.Z} S{relation}{self.S} "
                f"R{relation}{format_fraction(self.load)}")

    def to_lines(self) -> List[str]:
        values = asdict(self)
        lines = [f"{name}={values[name]}" for name in _INT_FIELDS]
        lines += [f"{name}={format_fraction(values[name])}" for name in _RATIO_FIELDS]
        lines.append(f"per_user_load={format_fraction(self.per_user_load)}")
        lines.append(f"exact={'true' if self.exact else 'false'}")
        return lines

    @classmethod
    def from_mapping(cls, values: Dict[str, str]) -> 'SchemeMetrics':
        """Inverse of ``to_lines`` once split into key/value pairs."""
        try:
            fields = {name: int(values[name]) for name in _INT_FIELDS}
            fields.update({name: parse_fraction(values[name]) for name in _RATIO_FIELDS})
            exact = values.get('exact', 'true')
        except KeyError as exc:
            raise MalformedInputError(f"metrics are missing '{exc.args[0]}'") from exc
        except ValueError as exc:
            raise MalformedInputError(f"bad metrics value: {exc}") from exc
        if exact not in ('true', 'false'):
            raise MalformedInputError(f"exact must be true or false, got '{exact}'")
        return cls(exact=exact == 'true', **fields)


def closed_form_metrics(K: int, F: int, Z: int, S: int, gamma: int, L: int, z_cache: int,
                        load: Optional[Fraction] = None, exact: bool = True) -> SchemeMetrics:
    """Metrics with M/N = z_cache/F and, unless given, R = S/F."""
    return SchemeMetrics(K=K, F=F, Z=Z, S=S, gamma=gamma, L=L, z_cache=z_cache,
                         memory_ratio=Fraction(z_cache, F),
                         load=Fraction(S, F) if load is None else Fraction(load), exact=exact)


def scheme_metrics_from_dpda(arr: CodedArray, phi: SenderMap, gamma: Optional[int] = None,
                             L: int = 1, z_cache: Optional[int] = None) -> SchemeMetrics:
    """
    Measure a DPDA.

    Without ``gamma``/``z_cache`` this is the original D2D reading: one cache
    per user, M/N = Z/F and R = S/F.

    Raises:
        PreconditionFailedError: if the array fails C1-C4
    """
    report = verify_dpda(arr, phi)
    if not report.valid:
        first = report.violations[0]
        raise PreconditionFailedError(f"not a valid DPDA: {first}")
    return closed_form_metrics(
        K=arr.K, F=arr.F, Z=report.Z, S=arr.S,
        gamma=arr.K if gamma is None else gamma, L=L,
        z_cache=report.Z if z_cache is None else z_cache,
    )


def parse_metrics_lines(lines: Iterable[str]) -> Dict[str, str]:
    values = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        key, sep, value = line.partition('=')
        if not sep:
            raise MalformedInputError(f"expected key=value, got '{line}'", line=number)
        values[key.strip()] = value.strip()
    return values
