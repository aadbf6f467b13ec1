import logging

import pytest

from swarmkit.errors import (
    ConfigurationError,
    ExperimentError,
    PlacementError,
    RecordError,
    SwarmkitError,
)
from swarmkit.log import LOGGER_NAME, configure_logging, level_for_verbosity


def test__ConfigurationError__names_field_and_is_value_error():
    err = ConfigurationError("rho_informed", "out of range")

    assert err.field == "rho_informed"
    assert str(err) == "rho_informed: out of range"
    assert isinstance(err, ValueError)
    assert isinstance(err, SwarmkitError)


def test__RecordError__carries_line():
    err = RecordError(7, "bad")

    assert err.line == 7
    assert str(err) == "line 7: bad"
    assert isinstance(err, ValueError)


def test__PlacementError__is_runtime_error():
    assert issubclass(PlacementError, RuntimeError)
    assert issubclass(PlacementError, SwarmkitError)


def test__ExperimentError__carries_failures():
    err = ExperimentError("all 3 runs failed", [object()] * 3)

    assert str(err) == "all 3 runs failed"
    assert len(err.failures) == 3
    assert isinstance(err, SwarmkitError)
    assert ExperimentError("none").failures == ()


@pytest.mark.parametrize(
    "verbosity, level",
    [(0, logging.INFO), (1, logging.DEBUG), (3, logging.DEBUG), (-1, logging.WARNING)],
)
def test__level_for_verbosity(verbosity, level):
    assert level_for_verbosity(verbosity) == level


def test__configure_logging__does_not_stack_handlers():
    configure_logging(0)
    logger = configure_logging(1)

    assert logger.name == LOGGER_NAME
    assert len(logger.handlers) == 1
    assert logger.level == logging.DEBUG
    assert logger.propagate is False

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.propagate = True
    logger.setLevel(logging.NOTSET)
