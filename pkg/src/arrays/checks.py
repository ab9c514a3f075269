"""Independent C1-C4 checker and sender-map search."""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from .coded_array import Cell, CodedArray, SenderMap

IRREGULAR = 'irregular'


class Condition(str, Enum):
    C1 = 'C1'
    C2 = 'C2'
    C3A = 'C3a'
    C3B = 'C3b'
    C4 = 'C4'


@dataclass(frozen=True)
class Violation:
    """One broken condition with the cells (or columns) that witness it."""

    condition: Condition
    detail: str
    cells: Tuple[Cell, ...] = ()
    columns: Tuple[int, ...] = ()

    def involves(self, row: int, col: int) -> bool:
        return (row, col) in self.cells or col in self.columns

    def __str__(self) -> str:
        where = ' '.join(f"({j + 1},{k + 1})" for j, k in self.cells)
        if self.columns:
            where = (where + ' ' if where else '') + 'columns ' + ' '.join(str(k + 1) for k in self.columns)
        return f"{self.condition.value}: {self.detail}" + (f" at {where}" if where else '')


@dataclass(frozen=True)
class PdaReport:
    K: int
    F: int
    Z: Optional[int]
    S: int
    regularity: Union[int, str]
    violations: Tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def params(self) -> Tuple[int, int, Optional[int], int]:
        return self.K, self.F, self.Z, self.S

    def describe(self) -> str:
        status = 'valid' if self.valid else f"{len(self.violations)} violation(s)"
        return f"({self.K},{self.F},{self.Z},{self.S}) g={self.regularity} {status}"


def _check_columns(arr: CodedArray) -> Tuple[Optional[int], List[Violation]]:
    counts = arr.star_counts()
    tally = Counter(int(c) for c in counts)
    if len(tally) == 1:
        return int(counts[0]), []
    ranked = tally.most_common()
    if ranked[0][1] == ranked[1][1]:
        deviant = tuple(range(arr.K))
    else:
        deviant = tuple(int(k) for k in np.flatnonzero(counts != ranked[0][0]))
    detail = 'star counts per column differ: ' + ', '.join(f"{c}x{n}" for c, n in sorted(tally.items()))
    return None, [Violation(Condition.C1, detail, columns=deviant)]


def _check_label(arr: CodedArray, s: int, cells: Tuple[Cell, ...]) -> List[Violation]:
    found = []
    for (j1, k1), (j2, k2) in combinations(cells, 2):
        if j1 == j2 or k1 == k2:
            where = 'row' if j1 == j2 else 'column'
            found.append(Violation(Condition.C3A, f"s{s} twice in one {where}",
                                   cells=((j1, k1), (j2, k2))))
            continue
        broken = tuple(c for c in ((j1, k2), (j2, k1)) if not arr.is_star(*c))
        if broken:
            found.append(Violation(Condition.C3B, f"s{s} cross cells are not stars",
                                   cells=((j1, k1), (j2, k2)) + broken))
    return found


def verify_pda(arr: CodedArray) -> PdaReport:
    """
    Check C1-C3 and report (K, F, Z, S) with the regularity g.

    Violations are collected, never raised, in a deterministic order: C1,
    then C2, then C3 per label in increasing label order.
    """
    z, violations = _check_columns(arr)
    by_label = arr.cells_by_label
    if arr.S == 0:
        violations.append(Violation(Condition.C2, 'the array has no integers (S=0)'))
    missing = [s for s in range(1, arr.S + 1) if s not in by_label]
    if missing:
        violations.append(Violation(Condition.C2, 'integers never used: ' +
                                    ', '.join(f"s{s}" for s in missing)))
    for s in sorted(by_label):
        violations.extend(_check_label(arr, s, by_label[s]))
    sizes = {len(cells) for cells in by_label.values()}
    regularity = sizes.pop() if len(sizes) == 1 and not missing else IRREGULAR
    return PdaReport(K=arr.K, F=arr.F, Z=z, S=arr.S, regularity=regularity,
                     violations=tuple(violations))


def verify_dpda(arr: CodedArray, phi: SenderMap) -> PdaReport:
    """verify_pda plus C4: column phi(s) is a star in every row holding s."""
    report = verify_pda(arr)
    extra = []
    if len(phi) != arr.S:
        extra.append(Violation(Condition.C4, f"sender map covers {len(phi)} labels, S={arr.S}"))
    else:
        for s, cells in sorted(arr.cells_by_label.items()):
            sender = phi[s]
            if not 0 <= sender < arr.K:
                extra.append(Violation(Condition.C4, f"phi(s{s}) is not a column"))
                continue
            for j, k in cells:
                if not arr.is_star(j, sender):
                    extra.append(Violation(Condition.C4, f"phi(s{s})={sender + 1} holds no star in row {j + 1}",
                                           cells=((j, k), (j, sender))))
    if not extra:
        return report
    return PdaReport(K=report.K, F=report.F, Z=report.Z, S=report.S, regularity=report.regularity,
                     violations=report.violations + tuple(extra))


def phi_candidates(arr: CodedArray) -> Dict[int, Tuple[int, ...]]:
    """For every label, the columns holding a star in all rows where it occurs."""
    stars = arr.stars
    candidates = {}
    for s, cells in sorted(arr.cells_by_label.items()):
        rows = sorted({j for j, _ in cells})
        common = np.all(stars[rows, :], axis=0)
        candidates[s] = tuple(int(k) for k in np.flatnonzero(common))
    return candidates


def find_phi(arr: CodedArray) -> Optional[SenderMap]:
    """Smallest qualifying column per label, or None if some label has none."""
    candidates = phi_candidates(arr)
    if len(candidates) != arr.S or any(not cols for cols in candidates.values()):
        return None
    return SenderMap(phi=tuple(candidates[s][0] for s in range(1, arr.S + 1)))
