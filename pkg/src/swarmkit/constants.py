# src/swarmkit/constants.py

r"""
Canonical experiment constants.

The module provides immutable containers for the values that define the
standard aggregation experiments: the arena presets for the two canonical
swarm sizes and the full parameter grid of a standard sweep.

Examples
--------
Look up the arena preset for a swarm of 50 robots:

>>> ARENA_PRESETS[50].arena_diameter
12.9

Enumerate the grid:

>>> len(TABLE1.swarm_sizes) * len(TABLE1.rho_informed_values)
10

The presets scale the arena and the sites together. Robots per square
meter of site agree within 3% between them, while the swarm is about 11%
denser over the whole N = 50 arena. Any other swarm size must supply
explicit diameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import (
    Final,
    Mapping,
)


@dataclass(
    frozen=True,
    slots=True,
)
class ArenaPreset:
    """
    Arena and site diameters for one canonical swarm size.

    Attributes
    ----------
    arena_diameter:
        Diameter of the circular arena in meters.
    site_diameter:
        Diameter of each aggregation site in meters.
    """

    arena_diameter: float
    site_diameter: float


@dataclass(
    frozen=True,
    slots=True,
)
class ParameterGrid:
    """
    Parameter values of the full standard sweep.

    Attributes
    ----------
    swarm_sizes:
        Swarm sizes ``N``.
    rho_informed_values:
        Proportions of informed robots in the swarm.
    rho_black_values:
        Proportions of informed robots preferring the black site.
    trials_per_cell:
        Independent trials per parameter combination.
    """

    swarm_sizes: tuple[int, ...] = (50, 100)
    rho_informed_values: tuple[float, ...] = (0.1, 0.2, 0.3, 0.4, 0.5)
    rho_black_values: tuple[float, ...] = (0.5, 0.6, 0.7, 0.8, 0.9, 1.0)
    trials_per_cell: int = 20


ARENA_PRESETS: Final[Mapping[int, ArenaPreset]] = {
    50: ArenaPreset(arena_diameter=12.9, site_diameter=2.8),
    100: ArenaPreset(arena_diameter=19.2, site_diameter=4.0),
}

TABLE1: Final[ParameterGrid] = ParameterGrid()

# Trial length, seconds
TRIAL_DURATION: Final[float] = 30_000.0

# Simulation timestep; divides every behavior constant exactly
TICK_DT: Final[float] = 0.1

# Occupancy time-series sampling interval, seconds
TIMESERIES_INTERVAL: Final[float] = 100.0
