"""Placement arrays and access topologies of multiaccess schemes."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Optional, Sequence, Tuple

import numpy as np

from ..errors import InvalidParametersError


@dataclass(frozen=True, eq=False)
class PlacementArray:
    """
    F x Gamma star pattern: ``stars[f, c]`` is True when cache node ``c``
    stores packet row ``f`` of every file.

    ``row_index`` and ``column_index`` keep the scheme-level names of rows
    (for example ``(D, T)``) and cache nodes (a point, or a pair ``(u, v)``).
    """

    stars: np.ndarray
    row_index: Tuple[Hashable, ...]
    column_index: Tuple[Hashable, ...]

    def __post_init__(self):
        if self.stars.ndim != 2 or 0 in self.stars.shape:
            raise InvalidParametersError(f"placement dimensions must be positive, got {self.stars.shape}")
        if len(self.row_index) != self.stars.shape[0] or len(self.column_index) != self.stars.shape[1]:
            raise InvalidParametersError("row and column indices must match the array shape")
        self.stars.setflags(write=False)

    @property
    def F(self) -> int:
        return self.stars.shape[0]

    @property
    def gamma(self) -> int:
        return self.stars.shape[1]

    @property
    def z(self) -> Optional[int]:
        """Stars per cache column, None when columns differ."""
        counts = set(int(c) for c in self.stars.sum(axis=0))
        return counts.pop() if len(counts) == 1 else None

    @property
    def memory_ratio(self) -> Fraction:
        if self.z is None:
            raise InvalidParametersError("cache nodes store different amounts, M/N is undefined")
        return Fraction(self.z, self.F)

    def cache_rows(self, column: int) -> Tuple[int, ...]:
        """Packet rows stored at one cache node."""
        return tuple(int(f) for f in np.flatnonzero(self.stars[:, column]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlacementArray):
            return NotImplemented
        return np.array_equal(self.stars, other.stars)

    __hash__ = None


@dataclass(frozen=True)
class AccessTopology:
    """``user_blocks[k]`` lists the cache columns (0-based) user k reads."""

    user_blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not self.user_blocks:
            raise InvalidParametersError("a topology needs at least one user")
        sizes = {len(block) for block in self.user_blocks}
        if len(sizes) != 1 or 0 in sizes:
            raise InvalidParametersError(f"every user must access the same positive number of caches, got {sorted(sizes)}")
        if any(len(set(block)) != len(block) for block in self.user_blocks):
            raise InvalidParametersError("a user lists the same cache twice")
        if len(set(map(frozenset, self.user_blocks))) != len(self.user_blocks):
            raise InvalidParametersError("two users access the same set of caches")

    @classmethod
    def from_names(cls, blocks: Sequence[Sequence[Hashable]],
                   column_index: Sequence[Hashable]) -> 'AccessTopology':
        position = {name: c for c, name in enumerate(column_index)}
        return cls(user_blocks=tuple(tuple(position[name] for name in block) for block in blocks))

    @classmethod
    def identity(cls, K: int) -> 'AccessTopology':
        return cls(user_blocks=tuple((k,) for k in range(K)))

    @property
    def K(self) -> int:
        return len(self.user_blocks)

    @property
    def L(self) -> int:
        return len(self.user_blocks[0])


def retrieval_stars(topology: AccessTopology, placement: PlacementArray) -> np.ndarray:
    """F x K pattern of the packets each user can read from its caches."""
    if any(c >= placement.gamma for block in topology.user_blocks for c in block):
        raise InvalidParametersError(f"topology refers to a cache beyond Gamma={placement.gamma}")
    columns = [placement.stars[:, list(block)].any(axis=1) for block in topology.user_blocks]
    return np.stack(columns, axis=1)
