"""Block designs: construction, profiles and the counting oracles."""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from ..errors import InvalidParametersError, OutOfRangeError
from ..utils.combinatorics import binom

NONUNIFORM = 'nonuniform'

Block = Tuple[int, ...]


@dataclass(frozen=True)
class DesignParams:
    """Declared t-(v,k,lambda) parameters."""

    t: int
    v: int
    k: int
    lam: int

    def __str__(self) -> str:
        return f"{self.t}-({self.v},{self.k},{self.lam})"


@dataclass(frozen=True)
class Design:
    """
    A point set with an ordered multiset of blocks.

    Points are positive integers; ``point_base`` only affects how points are
    printed (0 for designs whose source labels points from zero).
    """

    points: Tuple[int, ...]
    blocks: Tuple[Block, ...]
    declared: Optional[DesignParams] = None
    point_base: int = 1

    def __post_init__(self):
        point_set = set(self.points)
        if len(point_set) != len(self.points):
            raise InvalidParametersError("design points must be distinct")
        if any(p < 1 for p in self.points):
            raise InvalidParametersError("design points must be positive integers")
        for index, block in enumerate(self.blocks):
            if not block:
                raise InvalidParametersError(f"block {index + 1} is empty")
            if len(set(block)) != len(block):
                raise InvalidParametersError(f"block {index + 1} repeats a point")
            outside = set(block) - point_set
            if outside:
                raise InvalidParametersError(
                    f"block {index + 1} uses points {sorted(outside)} outside the point set"
                )
        if self.declared is not None:
            if self.declared.v != len(self.points):
                raise InvalidParametersError(
                    f"declared v={self.declared.v} but the design has {len(self.points)} points"
                )
            sizes = {len(b) for b in self.blocks}
            if sizes and sizes != {self.declared.k}:
                raise InvalidParametersError(
                    f"declared k={self.declared.k} but block sizes are {sorted(sizes)}"
                )

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], v: Optional[int] = None,
                    declared: Optional[DesignParams] = None, point_base: int = 1) -> 'Design':
        """Build a design on points 1..v with each block stored sorted."""
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        if v is None:
            v = max((max(b) for b in blocks), default=0)
        return cls(points=tuple(range(1, v + 1)), blocks=blocks,
                   declared=declared, point_base=point_base)

    @property
    def v(self) -> int:
        return len(self.points)

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def k(self) -> Optional[int]:
        """Common block size, or None when block sizes differ."""
        sizes = {len(block) for block in self.blocks}
        return sizes.pop() if len(sizes) == 1 else None

    def replication(self) -> Dict[int, int]:
        """Number of blocks through each point."""
        counts = Counter(p for block in self.blocks for p in block)
        return {p: counts.get(p, 0) for p in self.points}

    def incidence(self) -> np.ndarray:
        """v x b boolean incidence matrix, rows in point order."""
        position = {p: i for i, p in enumerate(self.points)}
        matrix = np.zeros((self.v, self.b), dtype=bool)
        for col, block in enumerate(self.blocks):
            for p in block:
                matrix[position[p], col] = True
        return matrix

    def display_block(self, block: Block) -> Tuple[int, ...]:
        return tuple(p - 1 + self.point_base for p in block)

    def display_blocks(self) -> List[Tuple[int, ...]]:
        return [self.display_block(block) for block in self.blocks]


def complete_design(n: int, k: int) -> Design:
    """
    All k-subsets of [n] in lexicographic order.

    The result is a t-(n, k, C(n-t, k-t)) design for every t <= k; the
    declared parameters record the strongest one (t = k, lambda = 1).
    """
    if n < 1 or k < 1 or k > n:
        raise InvalidParametersError(f"complete design needs 1 <= k <= n, got n={n}, k={k}")
    blocks = tuple(combinations(range(1, n + 1), k))
    return Design(points=tuple(range(1, n + 1)), blocks=blocks,
                  declared=DesignParams(t=k, v=n, k=k, lam=1))


def design_profile(design: Design, t: int) -> Union[int, str]:
    """
    Count the blocks through every t-subset of points.

    Returns the common count, or ``NONUNIFORM`` when two t-subsets differ.
    """
    smallest = min((len(block) for block in design.blocks), default=0)
    if t < 0 or t > smallest:
        raise InvalidParametersError(f"t={t} must satisfy 0 <= t <= k={smallest}")
    if t == 0:
        return design.b
    counts = Counter()
    for block in design.blocks:
        counts.update(combinations(block, t))
    if len(counts) != binom(design.v, t):
        # some t-subset lies in no block while others do
        return NONUNIFORM
    values = set(counts.values())
    return values.pop() if len(values) == 1 else NONUNIFORM


def block_count(design: Design, contain: Iterable[int], avoid: Iterable[int]) -> int:
    """Number of blocks holding every point of ``contain`` and none of ``avoid``."""
    contain, avoid = set(contain), set(avoid)
    if contain & avoid:
        raise InvalidParametersError(f"contain and avoid overlap in {sorted(contain & avoid)}")
    outside = (contain | avoid) - set(design.points)
    if outside:
        raise InvalidParametersError(f"points {sorted(outside)} are not in the design")
    return sum(1 for block in design.blocks
               if contain.issubset(block) and avoid.isdisjoint(block))


def lambda_closed_form(v: int, k: int, lam: int, t: int, i: int, j: int) -> Fraction:
    """
    Blocks through i given points and missing j others in a t-(v,k,lam) design.

    Equals lam * C(v-i-j, k-i) / C(v-t, k-t), valid for i + j <= t.
    """
    if i < 0 or j < 0 or i + j > t:
        raise OutOfRangeError(f"closed form needs i + j <= t, got i={i}, j={j}, t={t}")
    denominator = binom(v - t, k - t)
    if denominator == 0:
        raise InvalidParametersError(f"C(v-t, k-t) vanishes for v={v}, k={k}, t={t}")
    return Fraction(lam * binom(v - i - j, k - i), denominator)


def dual_design(design: Design) -> Design:
    """
    Swap points and blocks.

    Points of the dual are block indices 1..b; the dual block of an original
    point x lists the indices of the blocks containing x.
    """
    incidence = design.incidence()
    blocks = tuple(tuple(int(c) + 1 for c in np.flatnonzero(row)) for row in incidence)
    if any(not block for block in blocks):
        raise InvalidParametersError("a point lies in no block, its dual block would be empty")
    return Design(points=tuple(range(1, design.b + 1)), blocks=blocks)


def duplicate_blocks(design: Design) -> List[Tuple[int, ...]]:
    """Groups of block indices (0-based) that repeat the same point set."""
    seen: Dict[Block, List[int]] = {}
    for index, block in enumerate(design.blocks):
        seen.setdefault(tuple(sorted(block)), []).append(index)
    return [tuple(group) for group in seen.values() if len(group) > 1]
