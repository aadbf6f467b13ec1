# src/swarmkit/log.py

"""Logging setup for command-line use. The library itself only emits."""

from __future__ import annotations

import logging

LOGGER_NAME = "swarmkit"

_FORMAT = "[%(asctime)s] [%(levelname)s] %(name)s: %(message)s"
_DATEFMT = "%H:%M:%S"


def level_for_verbosity(verbosity: int) -> int:
    """
    Map a ``-v``/``-q`` count to a logging level.

    ``0`` is INFO, positive values are DEBUG, negative values WARNING.
    """
    if verbosity > 0:
        return logging.DEBUG
    if verbosity < 0:
        return logging.WARNING
    return logging.INFO


def configure_logging(verbosity: int = 0) -> logging.Logger:
    """
    Install a single stderr handler on the ``swarmkit`` logger.

    Calling it again replaces the handler instead of stacking a new one.
    """
    logger = logging.getLogger(LOGGER_NAME)

    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(_FORMAT, _DATEFMT))
    logger.addHandler(handler)
    logger.setLevel(level_for_verbosity(verbosity))
    logger.propagate = False

    return logger
