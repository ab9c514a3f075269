"""Coded arrays: F x K grids of stars and integer labels."""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import InvalidParametersError

# cells hold 0 for a star and 1..S for labels
STAR = 0

Cell = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class CodedArray:
    """
    A placement delivery array candidate.

    ``labels[s - 1]`` is the scheme-level label behind integer ``s``, for
    example ``((1, 3, 1), 2)`` for the second occurrence of vector 131.
    Arrays read from text keep the integers themselves as labels.
    """

    cells: np.ndarray
    labels: Tuple[Hashable, ...]

    def __post_init__(self):
        if self.cells.ndim != 2 or self.cells.shape[0] < 1 or self.cells.shape[1] < 1:
            raise InvalidParametersError(f"array dimensions must be positive, got {self.cells.shape}")
        if self.cells.size and (self.cells.min() < 0 or self.cells.max() > len(self.labels)):
            raise InvalidParametersError("cell values must lie in 0..S")
        self.cells.setflags(write=False)

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[Optional[Hashable]]]) -> 'CodedArray':
        """
        Intern scheme-level labels to integers 1..S.

        ``None`` marks a star. Integers are assigned in first-appearance
        order under a row-major scan.
        """
        registry: Dict[Hashable, int] = {}
        rows = []
        for grid_row in grid:
            row = []
            for key in grid_row:
                if key is None:
                    row.append(STAR)
                else:
                    row.append(registry.setdefault(key, len(registry) + 1))
            rows.append(row)
        return cls(cells=np.array(rows, dtype=np.int64), labels=tuple(registry))

    @classmethod
    def from_integers(cls, cells: np.ndarray) -> 'CodedArray':
        cells = np.array(cells, dtype=np.int64)
        top = int(cells.max()) if cells.size else 0
        return cls(cells=cells, labels=tuple(range(1, top + 1)))

    @property
    def F(self) -> int:
        return self.cells.shape[0]

    @property
    def K(self) -> int:
        return self.cells.shape[1]

    @property
    def S(self) -> int:
        return len(self.labels)

    @property
    def stars(self) -> np.ndarray:
        return self.cells == STAR

    def star_counts(self) -> np.ndarray:
        return self.stars.sum(axis=0)

    def is_star(self, row: int, col: int) -> bool:
        return self.cells[row, col] == STAR

    def label_of(self, s: int) -> Hashable:
        return self.labels[s - 1]

    def id_of(self, label: Hashable) -> int:
        return self.labels.index(label) + 1

    @cached_property
    def cells_by_label(self) -> Dict[int, Tuple[Cell, ...]]:
        """Row-major cell lists for every integer present in the array."""
        found: Dict[int, List[Cell]] = {}
        for j, k in zip(*np.nonzero(self.cells)):
            found.setdefault(int(self.cells[j, k]), []).append((int(j), int(k)))
        return {s: tuple(cells) for s, cells in found.items()}

    def multiplicities(self) -> Counter:
        return Counter({s: len(cells) for s, cells in self.cells_by_label.items()})

    def with_cell(self, row: int, col: int, value: int) -> 'CodedArray':
        """Copy with one cell replaced; labels beyond S are rejected."""
        cells = self.cells.copy()
        cells[row, col] = value
        return CodedArray(cells=cells, labels=self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CodedArray):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.cells, other.cells)

    __hash__ = None


@dataclass(frozen=True)
class SenderMap:
    """phi: integer label s (1..S) -> sending column (0-based)."""

    phi: Tuple[int, ...]

    def __getitem__(self, s: int) -> int:
        return self.phi[s - 1]

    def __len__(self) -> int:
        return len(self.phi)

    def items(self) -> Iterable[Tuple[int, int]]:
        return ((s, col) for s, col in enumerate(self.phi, start=1))
