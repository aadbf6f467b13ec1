# src/swarmkit/engine/config.py

from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Integral, Real
import math

from swarmkit.arena.geometry import make_arena
from swarmkit.arena.types import ArenaSpec
from swarmkit.constants import TICK_DT, TIMESERIES_INTERVAL, TRIAL_DURATION
from swarmkit.controller.types import ControllerParams, Variant
from swarmkit.errors import ConfigurationError
from swarmkit.robot.sensing import CensusFilter
from swarmkit.robot.types import BodySpec


def round_half_up(value: float) -> int:
    """Nearest integer, halves rounded up."""
    return int(math.floor(value + 0.5))


def _ticks_in(duration: float, tick_dt: float) -> int | None:
    """Whole number of ticks in ``duration``, ``None`` if not a multiple."""
    ratio = duration / tick_dt
    whole = round(ratio)
    if abs(ratio - whole) > 1e-9 * max(1.0, ratio):
        return None
    return int(whole)


@dataclass(frozen=True)
class TrialConfig:
    """
    Definition of one seeded aggregation trial.

    Parameters
    ----------
    swarm_size:
        Number of robots ``N``.
    rho_informed:
        Proportion of informed robots, in ``[0, 1]``.
    rho_black:
        Proportion of informed robots that prefer the black site,
        in ``[0, 1]``.
    variant:
        Controller variant; strings ``"baseline"`` and ``"simplified"``
        are accepted.
    arena:
        Arena geometry; the preset for ``swarm_size`` when omitted.
    body:
        Robot footprint and sensing ranges.
    controller:
        Controller constants.
    duration:
        Trial length in seconds.
    tick_dt:
        Simulation timestep in seconds. Must divide the FSM update period,
        the straight-leg duration, the entry duration and ``duration``.
    seed:
        Seed of the trial's random stream.
    timeseries_interval:
        Occupancy sampling interval in seconds, ``None`` to disable.
    max_placement_attempts:
        Rejection-sampling budget per robot at placement.
    census_filter:
        Optional explicit census filter; must match the variant.

    Notes
    -----
    Robot counts follow ``N_I = round(N rho_I)``, ``N_sb = round(N_I rho_sb)``
    and ``N_sw = N_I - N_sb``, rounding halves up.
    """

    swarm_size: int = 50
    rho_informed: float = 0.3
    rho_black: float = 0.7
    variant: Variant = Variant.SIMPLIFIED
    arena: ArenaSpec | None = None
    body: BodySpec = field(default_factory=BodySpec)
    controller: ControllerParams = field(default_factory=ControllerParams)
    duration: float = TRIAL_DURATION
    tick_dt: float = TICK_DT
    seed: int = 0
    timeseries_interval: float | None = TIMESERIES_INTERVAL
    max_placement_attempts: int = 1000
    census_filter: CensusFilter | None = None

    def __post_init__(self) -> None:
        if isinstance(self.variant, str):
            try:
                object.__setattr__(self, "variant", Variant(self.variant))
            except ValueError:
                raise ConfigurationError(
                    "variant", f"unknown variant {self.variant!r}"
                ) from None

        self.check_args()

        if self.arena is None:
            object.__setattr__(self, "arena", make_arena(self.swarm_size))

    def check_args(self) -> None:
        """
        Validate counts, proportions and timing.

        Raises
        ------
        ConfigurationError
            Naming the first offending field.
        """
        if (
            isinstance(self.swarm_size, bool)
            or not isinstance(self.swarm_size, Integral)
            or self.swarm_size < 1
        ):
            raise ConfigurationError("swarm_size", "must be a positive integer")

        for name in ("rho_informed", "rho_black"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, Real):
                raise ConfigurationError(name, "must be a real number")
            if not 0.0 <= value <= 1.0:
                raise ConfigurationError(name, f"{name} out of [0,1]")

        if not isinstance(self.variant, Variant):
            raise ConfigurationError("variant", "must be a Variant")

        if (
            self.census_filter is not None
            and self.census_filter is not self.variant.census_filter
        ):
            raise ConfigurationError(
                "census_filter",
                f"{self.census_filter.value} is inconsistent with the "
                f"{self.variant.value} variant",
            )

        for name in ("duration", "tick_dt"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, Real):
                raise ConfigurationError(name, "must be a real number")
            if not math.isfinite(value) or value <= 0.0:
                raise ConfigurationError(name, "must be positive and finite")

        for name, span in (
            ("duration", self.duration),
            ("fsm_update_period", self.controller.fsm_update_period),
            ("straight_duration", self.controller.straight_duration),
            ("entry_forward_duration", self.controller.entry_forward_duration),
        ):
            if _ticks_in(span, self.tick_dt) is None:
                raise ConfigurationError(
                    "tick_dt", f"must divide {name}={span} exactly"
                )

        if self.timeseries_interval is not None:
            if (
                not isinstance(self.timeseries_interval, Real)
                or self.timeseries_interval <= 0.0
                or _ticks_in(self.timeseries_interval, self.tick_dt) is None
            ):
                raise ConfigurationError(
                    "timeseries_interval",
                    "must be a positive multiple of tick_dt",
                )

        if (
            isinstance(self.seed, bool)
            or not isinstance(self.seed, Integral)
            or not 0 <= self.seed < 2**64
        ):
            raise ConfigurationError("seed", "must be an integer in [0, 2**64)")

        if (
            isinstance(self.max_placement_attempts, bool)
            or not isinstance(self.max_placement_attempts, Integral)
            or self.max_placement_attempts < 1
        ):
            raise ConfigurationError(
                "max_placement_attempts", "must be a positive integer"
            )

    # ----------------------------
    # derived counts
    # ----------------------------
    @property
    def rho_white(self) -> float:
        return 1.0 - self.rho_black

    @property
    def n_informed(self) -> int:
        return round_half_up(self.swarm_size * self.rho_informed)

    @property
    def n_black(self) -> int:
        return round_half_up(self.n_informed * self.rho_black)

    @property
    def n_white(self) -> int:
        return self.n_informed - self.n_black

    @property
    def n_non_informed(self) -> int:
        return self.swarm_size - self.n_informed

    # ----------------------------
    # derived tick counts
    # ----------------------------
    @property
    def n_ticks(self) -> int:
        return _ticks_in(self.duration, self.tick_dt)

    @property
    def ticks_per_fsm_update(self) -> int:
        return _ticks_in(self.controller.fsm_update_period, self.tick_dt)

    @property
    def ticks_per_sample(self) -> int | None:
        if self.timeseries_interval is None:
            return None
        return _ticks_in(self.timeseries_interval, self.tick_dt)
