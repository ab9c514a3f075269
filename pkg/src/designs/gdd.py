"""Group divisible designs on m groups of q points."""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional, Tuple, Union

from ..errors import InvalidParametersError, OutOfRangeError, PreconditionFailedError
from ..utils.combinatorics import binom
from .blocks import NONUNIFORM
from .resolvable import CrdProfile, Resolution

# (u, v): the v-th point of group u, both 1-based
Point = Tuple[int, int]
GddBlock = Tuple[Point, ...]


@dataclass(frozen=True)
class GroupDivisibleDesign:
    """
    Blocks over the points (u, v), u in [m], v in [q].

    Each block is stored sorted by group and meets every group at most once,
    so ``block_groups`` and ``block_values`` read its group vector and value
    vector directly.
    """

    m: int
    q: int
    blocks: Tuple[GddBlock, ...]
    t: Optional[int] = None
    lam: Optional[int] = None

    def __post_init__(self):
        if self.m < 1 or self.q < 1:
            raise InvalidParametersError(f"m and q must be positive, got m={self.m}, q={self.q}")
        for index, block in enumerate(self.blocks, start=1):
            if not block:
                raise InvalidParametersError(f"block {index} is empty")
            if any(not (1 <= u <= self.m and 1 <= v <= self.q) for u, v in block):
                raise InvalidParametersError(f"block {index} has a point outside [m] x [q]")
            groups = [u for u, _ in block]
            if len(set(groups)) != len(groups):
                raise InvalidParametersError(f"block {index} meets a group more than once")
            if list(block) != sorted(block):
                raise InvalidParametersError(f"block {index} must be sorted by group")

    @classmethod
    def from_blocks(cls, m: int, q: int, blocks: Iterable[Iterable[Point]],
                    t: Optional[int] = None, lam: Optional[int] = None) -> 'GroupDivisibleDesign':
        return cls(m=m, q=q, blocks=tuple(tuple(sorted(b)) for b in blocks), t=t, lam=lam)

    @property
    def points(self) -> Tuple[Point, ...]:
        return tuple(product(range(1, self.m + 1), range(1, self.q + 1)))

    @property
    def k(self) -> Optional[int]:
        sizes = {len(block) for block in self.blocks}
        return sizes.pop() if len(sizes) == 1 else None

    @staticmethod
    def block_groups(block: GddBlock) -> Tuple[int, ...]:
        return tuple(u for u, _ in block)

    @staticmethod
    def block_values(block: GddBlock) -> Tuple[int, ...]:
        return tuple(v for _, v in block)

    def describe(self) -> str:
        head = f"{self.t}-({self.m},{self.q},{self.k},{self.lam})" if self.t else f"({self.m},{self.q},{self.k})"
        return f"{head} GDD"


def trivial_gdd(m: int, q: int, t: int) -> GroupDivisibleDesign:
    """
    The t-(m,q,t,1) GDD of every t-set drawn from t distinct groups.

    Blocks are sorted as point tuples, which lists (1,1),(2,1) before
    (1,1),(2,2) before (1,1),(3,1).
    """
    if not 1 < t < m or q < 2:
        raise InvalidParametersError(f"trivial GDD needs 1 < t < m and q >= 2, got m={m}, q={q}, t={t}")
    blocks = [
        tuple(zip(groups, values))
        for groups in combinations(range(1, m + 1), t)
        for values in product(range(1, q + 1), repeat=t)
    ]
    return GroupDivisibleDesign(m=m, q=q, blocks=tuple(sorted(blocks)), t=t, lam=1)


def gdd_profile(gdd: GroupDivisibleDesign, i: int) -> Union[int, str]:
    """Blocks through every i-set of points from i distinct groups."""
    smallest = min((len(block) for block in gdd.blocks), default=0)
    if i < 1 or i > smallest:
        raise InvalidParametersError(f"i={i} must satisfy 1 <= i <= k={smallest}")
    counts = Counter()
    for block in gdd.blocks:
        counts.update(combinations(block, i))
    if len(counts) != binom(gdd.m, i) * gdd.q ** i:
        return NONUNIFORM
    values = set(counts.values())
    return values.pop() if len(values) == 1 else NONUNIFORM


def gdd_lambda_closed(m: int, q: int, k: int, lam: int, t: int, i: int) -> Fraction:
    """lam * q^(t-i) * C(m-i, t-i) / C(k-i, t-i), the index at strength i <= t."""
    if i < 0 or i > t:
        raise OutOfRangeError(f"closed form needs 0 <= i <= t, got i={i}, t={t}")
    return Fraction(lam * q ** (t - i) * binom(m - i, t - i), binom(k - i, t - i))


def gdd_from_crd(res: Resolution, profile: CrdProfile) -> GroupDivisibleDesign:
    """
    The dual of a cross resolvable design, read as a GDD.

    Group u is the u-th parallel class and (u, v) is its v-th block; the
    block of an original point lists the blocks through it, one per class.
    """
    if not profile.is_crd:
        raise PreconditionFailedError("the resolution is not a cross resolvable design")
    t = profile.strength
    owner = {}
    for u, cls in enumerate(res.classes, start=1):
        for v, block_index in enumerate(cls, start=1):
            for p in res.design.blocks[block_index]:
                owner[(p, u)] = (u, v)
    blocks = tuple(
        tuple(owner[(p, u)] for u in range(1, res.r + 1))
        for p in res.design.points
    )
    return GroupDivisibleDesign(m=res.r, q=res.design.v // res.design.k, blocks=blocks,
                                t=t, lam=profile.mu[t])
