"""Utility functions."""

from .combinatorics import binom, display_decimal, exact_int, format_fraction, parse_fraction
from .logging_setup import configure_logging
from .seeding import DEMAND_STREAM, LIBRARY_STREAM, make_rng
from .timing import Timer

__all__ = [
    'binom', 'display_decimal', 'exact_int', 'format_fraction', 'parse_fraction',
    'DEMAND_STREAM', 'LIBRARY_STREAM', 'make_rng',
    'configure_logging', 'Timer',
]
