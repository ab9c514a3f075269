"""Root logger configuration for the command-line front end."""

import logging
import sys

LOG_FORMAT = "%(asctime)s [%(levelname)s] [%(name)s] %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def configure_logging(verbose: bool = False) -> None:
    """
    Send records to stderr, DEBUG with ``verbose`` and WARNING otherwise.

    Library modules only create loggers; this is the one place handlers are
    installed, so stdout stays free of log output.
    """
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, format=LOG_FORMAT,
                        datefmt=DATE_FORMAT, stream=sys.stderr, force=True)
