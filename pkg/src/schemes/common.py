"""Shared steps of the constructions: occurrence numbers and checked DPDAs."""

import logging
from collections import Counter
from fractions import Fraction
from typing import Callable, Hashable, Optional, Sequence, Tuple, Union

from ..arrays import CodedArray, SenderMap, verify_dpda
from ..errors import ConstructionUnsupportedError, InvalidParametersError

logger = logging.getLogger(__name__)


class OccurrenceCounter:
    """
    Running count of a raw label inside one row group.

    Calls must follow the row-major scan of the group; the n-th call with
    the same (group, raw) pair returns n.
    """

    def __init__(self):
        self._seen = Counter()

    def next(self, group: Hashable, raw: Hashable) -> int:
        self._seen[(group, raw)] += 1
        return self._seen[(group, raw)]


def require_int(value: Union[int, Fraction], what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise InvalidParametersError(f"{what}={value} is not an integer for these parameters")
    return value.numerator


def checked_dpda(grid: Sequence[Sequence[Optional[Hashable]]],
                 sender_of: Callable[[Hashable], Optional[int]],
                 what: str) -> Tuple[CodedArray, SenderMap]:
    """
    Intern a label grid, attach the prescribed senders and run the checker.

    Args:
        grid: Rows of scheme-level labels, None for a star
        sender_of: Maps a scheme-level label to its sending column (0-based),
            or None when no column qualifies
        what: Name used in log records and error messages

    Raises:
        ConstructionUnsupportedError: when a label has no sender or the
            array fails C1-C4; the checker's report is attached
    """
    arr = CodedArray.from_grid(grid)
    senders = []
    for s, label in enumerate(arr.labels, start=1):
        col = sender_of(label)
        if col is None:
            raise ConstructionUnsupportedError(f"{what}: no user qualifies as sender of s{s} {label}")
        senders.append(col)
    phi = SenderMap(phi=tuple(senders))
    report = verify_dpda(arr, phi)
    if not report.valid:
        raise ConstructionUnsupportedError(
            f"{what}: the delivery array is not a DPDA ({report.violations[0]})", report=report)
    logger.info("%s: (K,F,Z,S)=%s g=%s", what, report.params, report.regularity)
    return arr, phi
