"""Random streams for reproducible simulations."""

import numpy as np

from ..errors import InvalidParametersError

LIBRARY_STREAM = 0
DEMAND_STREAM = 1


def make_rng(seed: int, stream: int = LIBRARY_STREAM) -> np.random.Generator:
    """
    Build an independent generator for one consumer of a seed.

    The library bytes and the demand vectors draw from different streams of
    the same seed, so changing how many demands are drawn never changes the
    file contents.

    Args:
        seed: Non-negative integer seed value
        stream: Stream id (``LIBRARY_STREAM`` or ``DEMAND_STREAM``)

    Returns:
        A numpy ``Generator``
    """
    if seed < 0:
        raise InvalidParametersError(f"seed must be non-negative, got seed={seed}")
    return np.random.default_rng([stream, seed])
