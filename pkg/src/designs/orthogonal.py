"""Orthogonal arrays: profiles, constructions and distance checks."""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence, Tuple, Union

import galois
import numpy as np

from ..errors import (
    InvalidParametersError,
    MalformedInputError,
    NotApplicableError,
    UnsupportedFieldError,
)

NOT_AN_OA = 'not-an-OA'

# rows compared at once when broadcasting Hamming distances
_CHUNK = 512


@dataclass(frozen=True)
class OrthogonalArray:
    """
    Rows over the alphabet [q] = {1..q}.

    ``strength`` and ``index`` are the declared t and lambda; ``symbol_base``
    is 0 when the source prints symbols from zero.
    """

    q: int
    rows: Tuple[Tuple[int, ...], ...]
    strength: Optional[int] = None
    index: Optional[int] = None
    symbol_base: int = 1

    def __post_init__(self):
        if self.q < 1:
            raise InvalidParametersError(f"alphabet size must be positive, got q={self.q}")
        if not self.rows:
            raise InvalidParametersError("an orthogonal array needs at least one row")
        width = len(self.rows[0])
        if width < 1 or any(len(row) != width for row in self.rows):
            raise MalformedInputError("orthogonal array rows must all have the same length")
        if any(not 1 <= x <= self.q for row in self.rows for x in row):
            raise InvalidParametersError(f"orthogonal array symbols must lie in 1..{self.q}")

    @property
    def columns(self) -> int:
        return len(self.rows[0])

    def as_matrix(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def display_row(self, row: Sequence[int]) -> Tuple[int, ...]:
        return tuple(x - 1 + self.symbol_base for x in row)


def oa_profile(rows: Sequence[Sequence[int]], alphabet_size: int, t: int) -> Union[int, str]:
    """
    Count every t-tuple in every choice of t columns.

    Returns the common count lambda, or ``NOT_AN_OA``.
    """
    if not rows:
        raise MalformedInputError("no rows given")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise MalformedInputError("ragged rows: every row must have the same length")
    if t < 1 or t > width:
        raise InvalidParametersError(f"strength t={t} must satisfy 1 <= t <= {width}")
    matrix = np.array(rows, dtype=np.int64)
    if matrix.min() < 1 or matrix.max() > alphabet_size:
        raise InvalidParametersError(f"entries must lie in 1..{alphabet_size}")
    if len(rows) % alphabet_size ** t:
        return NOT_AN_OA
    lam = len(rows) // alphabet_size ** t
    weights = alphabet_size ** np.arange(t - 1, -1, -1)
    for chosen in combinations(range(width), t):
        codes = (matrix[:, chosen] - 1) @ weights
        counts = np.bincount(codes, minlength=alphabet_size ** t)
        if np.any(counts != lam):
            return NOT_AN_OA
    return lam


def is_simple(oa: OrthogonalArray) -> bool:
    return len(set(oa.rows)) == len(oa.rows)


def proper_oa(q: int, m: int) -> OrthogonalArray:
    """
    The (m-1)-(q,m,1) OA of vectors whose symbol sum is m modulo q.

    With that constant the all-ones vector is always a row.
    """
    if q < 2 or m < 2:
        raise InvalidParametersError(f"proper OA needs q >= 2 and m >= 2, got q={q}, m={m}")
    rows = tuple(row for row in product(range(1, q + 1), repeat=m) if sum(row) % q == m % q)
    return OrthogonalArray(q=q, rows=rows, strength=m - 1, index=1)


def linear_mds_oa(q: int, m: int, s: int) -> OrthogonalArray:
    """
    The s-(q,m,1) OA of a Reed-Solomon code over GF(q).

    Codeword coordinates are evaluations of the polynomials of degree < s at
    the first m field elements; for m = q + 1 the last coordinate is the
    coefficient of x^(s-1) (the point at infinity).
    """
    if not galois.is_prime_power(q):
        raise UnsupportedFieldError(f"q={q} is not a prime power, no field GF(q) exists")
    if not 1 <= s <= m <= q + 1:
        raise InvalidParametersError(f"need 1 <= s <= m <= q+1, got q={q}, m={m}, s={s}")
    gf = galois.GF(q)
    finite = min(m, q)
    points = gf(np.arange(finite))
    generator = gf.Zeros((s, m))
    for power in range(s):
        generator[power, :finite] = points ** power
    if m == q + 1:
        generator[s - 1, q] = 1
    messages = gf(np.array(list(product(range(q), repeat=s)), dtype=int))
    codewords = (messages @ generator).view(np.ndarray) + 1
    rows = tuple(sorted(tuple(int(x) for x in word) for word in codewords))
    return OrthogonalArray(q=q, rows=rows, strength=s, index=1)


def _declared_index(oa: OrthogonalArray) -> int:
    if oa.strength is None:
        raise NotApplicableError("the orthogonal array has no declared strength")
    if oa.index is not None:
        return oa.index
    lam = oa_profile(oa.rows, oa.q, oa.strength)
    if lam == NOT_AN_OA:
        raise NotApplicableError(f"rows do not form an OA of strength {oa.strength}")
    return lam


def _min_distances(targets: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Distance from each target vector to its nearest row."""
    best = np.empty(len(targets), dtype=np.int64)
    for start in range(0, len(targets), _CHUNK):
        block = targets[start:start + _CHUNK]
        distances = (block[:, None, :] != rows[None, :, :]).sum(axis=2)
        best[start:start + _CHUNK] = distances.min(axis=1)
    return best


def oa_min_distance(oa: OrthogonalArray) -> int:
    """Minimum Hamming distance between distinct rows of an index-1 OA."""
    if _declared_index(oa) != 1:
        raise NotApplicableError("minimum distance is defined here for index-1 arrays only")
    matrix = oa.as_matrix()
    if len(matrix) < 2:
        raise NotApplicableError("a single row has no pairwise distance")
    best = oa.columns
    for start in range(0, len(matrix), _CHUNK):
        block = matrix[start:start + _CHUNK]
        distances = (block[:, None, :] != matrix[None, :, :]).sum(axis=2)
        for offset in range(len(block)):
            distances[offset, start + offset] = oa.columns + 1
        best = min(best, int(distances.min()))
    return best


def covering_check(oa: OrthogonalArray, radius: int) -> bool:
    """True iff every vector of [q]^r is within ``radius`` of some row."""
    if _declared_index(oa) != 1:
        raise NotApplicableError("covering check is defined here for index-1 arrays only")
    space = np.array(list(product(range(1, oa.q + 1), repeat=oa.columns)), dtype=np.int64)
    return bool(np.all(_min_distances(space, oa.as_matrix()) <= radius))
