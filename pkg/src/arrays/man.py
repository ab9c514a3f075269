"""The Maddah-Ali-Niesen placement delivery array."""

from itertools import combinations

from ..errors import ConstructionUnsupportedError, InvalidParametersError
from .coded_array import CodedArray


def man_pda(K0: int, t0: int) -> CodedArray:
    """
    Build the (t0+1)-(K0, C(K0,t0), C(K0-1,t0-1), C(K0,t0+1)) PDA.

    Rows are the t0-subsets T of [K0] in lexicographic order. Cell (T, k) is
    a star when k is in T and otherwise carries the (t0+1)-subset T + {k}.

    Args:
        K0: Number of users
        t0: Caching parameter, 1 <= t0 <= K0

    Returns:
        The coded array with the subsets as its scheme-level labels
    """
    if K0 < 1 or t0 < 1 or t0 > K0:
        raise InvalidParametersError(f"MAN PDA needs 1 <= t0 <= K0, got K0={K0}, t0={t0}")
    if t0 == K0:
        raise ConstructionUnsupportedError(
            f"t0=K0={K0} leaves a single all-star row with S=0, which is not a PDA")
    grid = [
        [None if k in subset else tuple(sorted(subset + (k,))) for k in range(1, K0 + 1)]
        for subset in combinations(range(1, K0 + 1), t0)
    ]
    return CodedArray.from_grid(grid)
