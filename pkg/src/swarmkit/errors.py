# src/swarmkit/errors.py

"""Exception taxonomy for swarmkit."""

from __future__ import annotations


__all__ = [
    "SwarmkitError",
    "ConfigurationError",
    "PlacementError",
    "RecordError",
    "ExperimentError",
]


class SwarmkitError(Exception):
    """Base class for all swarmkit errors."""


class ConfigurationError(SwarmkitError, ValueError):
    """
    Invalid experiment parameter.

    Parameters
    ----------
    field : str
        Name of the offending configuration key.
    message : str
        Human-readable diagnostic.
    """

    def __init__(self, field: str, message: str) -> None:
        self.field: str = field
        super().__init__(f"{field}: {message}")


class PlacementError(SwarmkitError, RuntimeError):
    """Initial robot placement failed within the rejection budget."""


class RecordError(SwarmkitError, ValueError):
    """
    Malformed raw-results record.

    Parameters
    ----------
    line : int
        One-based line number of the record in its file.
    message : str
        Human-readable diagnostic.
    """

    def __init__(self, line: int, message: str) -> None:
        self.line: int = line
        super().__init__(f"line {line}: {message}")


class ExperimentError(SwarmkitError, RuntimeError):
    """
    A batch experiment produced no usable trial.

    Parameters
    ----------
    message : str
        Human-readable diagnostic.
    failures : tuple
        ``TrialFailure`` entries of the failed trials.
    """

    def __init__(self, message: str, failures: tuple = ()) -> None:
        self.failures: tuple = tuple(failures)
        super().__init__(message)
