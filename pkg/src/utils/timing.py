"""Timing utilities for performance logging."""

import time


class Timer:
    """
    Context manager measuring wall-clock time.

    Usage:
        with Timer() as timer:
            build_something()
        logger.info("built in %.3fs", timer.elapsed)
    """

    def __init__(self):
        self.start = None
        self.elapsed = None

    def __enter__(self) -> 'Timer':
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.elapsed = time.perf_counter() - self.start
