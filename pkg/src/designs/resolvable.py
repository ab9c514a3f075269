"""Resolvable designs, cross resolvable designs and their constructions."""

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, Optional, Sequence, Tuple

import galois
import numpy as np

from ..errors import DuplicateRowsError, InvalidParametersError, UnsupportedFieldError
from .blocks import Design
from .orthogonal import OrthogonalArray, is_simple


@dataclass(frozen=True)
class Resolution:
    """A design together with a partition of its blocks into parallel classes."""

    design: Design
    classes: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        used = sorted(i for cls in self.classes for i in cls)
        if used != list(range(self.design.b)):
            raise InvalidParametersError("parallel classes must partition the block indices")
        k = self.design.k
        if k is None or self.design.v % k:
            raise InvalidParametersError("a resolvable design needs equal block sizes dividing v")
        point_set = set(self.design.points)
        for number, cls in enumerate(self.classes, start=1):
            covered = [p for i in cls for p in self.design.blocks[i]]
            if len(covered) != len(set(covered)) or set(covered) != point_set:
                raise InvalidParametersError(f"class {number} is not a partition of the points")
            if len(cls) != self.design.v // k:
                raise InvalidParametersError(f"class {number} must have v/k={self.design.v // k} blocks")

    @property
    def r(self) -> int:
        return len(self.classes)

    def class_blocks(self, number: int) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.design.blocks[i] for i in self.classes[number])


@dataclass(frozen=True)
class CrdProfile:
    """
    Cross-class intersection sizes.

    ``mu[i]`` is the constant size of the intersection of i blocks taken from
    i distinct classes, or None when the size varies or is zero.
    """

    mu: Dict[int, Optional[int]] = field(default_factory=dict)

    @property
    def is_crd(self) -> bool:
        return any(value is not None for value in self.mu.values())

    @property
    def strength(self) -> Optional[int]:
        """Largest i with a constant nonzero intersection size."""
        present = [i for i, value in self.mu.items() if value is not None]
        return max(present) if present else None

    def describe(self) -> str:
        parts = [f"mu{i}={'absent' if value is None else value}" for i, value in sorted(self.mu.items())]
        return ' '.join(parts)


def crd_profile(res: Resolution) -> CrdProfile:
    """Exhaustive intersection profile for i = 2..r classes."""
    blocks = [[frozenset(b) for b in res.class_blocks(c)] for c in range(res.r)]
    mu: Dict[int, Optional[int]] = {}
    for i in range(2, res.r + 1):
        sizes = set()
        for chosen in combinations(range(res.r), i):
            for picks in product(*(blocks[c] for c in chosen)):
                sizes.add(len(frozenset.intersection(*picks)))
                if len(sizes) > 1:
                    break
            if len(sizes) > 1:
                break
        value = sizes.pop() if len(sizes) == 1 else 0
        mu[i] = value if value > 0 else None
    return CrdProfile(mu=mu)


def _field(q: int):
    if not galois.is_prime_power(q):
        raise UnsupportedFieldError(f"q={q} is not a prime power, no field GF(q) exists")
    return galois.GF(q)


def resolvable_from_code(q: int, columns: Sequence[Sequence[int]]) -> Resolution:
    """
    Resolvable design from the columns of a linear code's generator matrix.

    Points are the q^s message vectors, numbered 0..q^s-1 in base-q order
    (first coordinate most significant). Each column c contributes one
    parallel class whose blocks are the level sets of <message, c>, in the
    order of the field element's integer value.
    """
    if not columns:
        raise InvalidParametersError("at least one code column is required")
    s = len(columns[0])
    if s < 1 or any(len(c) != s for c in columns):
        raise InvalidParametersError("all code columns must have the same positive length")
    gf = _field(q)
    if any(not 0 <= x < q for c in columns for x in c):
        raise InvalidParametersError(f"column entries must be field elements 0..{q - 1}")
    if any(not any(c) for c in columns):
        raise InvalidParametersError("a zero column gives no parallel class")

    messages = gf(np.array(list(product(range(q), repeat=s)), dtype=int))
    generator = gf(np.array(columns, dtype=int))
    values = (messages @ generator.T).view(np.ndarray)

    blocks = []
    classes = []
    for c in range(len(columns)):
        cls = []
        for level in range(q):
            # points are stored 1-based and printed 0-based
            members = tuple(int(n) + 1 for n in np.flatnonzero(values[:, c] == level))
            cls.append(len(blocks))
            blocks.append(members)
        classes.append(tuple(cls))
    design = Design(points=tuple(range(1, q ** s + 1)), blocks=tuple(blocks), point_base=0)
    return Resolution(design=design, classes=tuple(classes))


def crd_from_oa(oa: OrthogonalArray) -> Resolution:
    """
    The cross resolvable design of an orthogonal array.

    Points are the OA rows (1..number of rows); column c gives the class
    whose block for symbol x holds the rows carrying x in column c.
    """
    if not is_simple(oa):
        raise DuplicateRowsError("the orthogonal array has repeated rows")
    matrix = oa.as_matrix()
    blocks = []
    classes = []
    for c in range(oa.columns):
        cls = []
        for symbol in range(1, oa.q + 1):
            members = tuple(int(i) + 1 for i in np.flatnonzero(matrix[:, c] == symbol))
            if not members:
                raise InvalidParametersError(f"symbol {symbol} never occurs in column {c + 1}")
            cls.append(len(blocks))
            blocks.append(members)
        classes.append(tuple(cls))
    design = Design(points=tuple(range(1, len(oa.rows) + 1)), blocks=tuple(blocks))
    return Resolution(design=design, classes=tuple(classes))
