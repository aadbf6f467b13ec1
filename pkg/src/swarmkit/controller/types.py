# src/swarmkit/controller/types.py

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from numbers import Real
from typing import ClassVar, TypeAlias
import math

import numpy as np

from swarmkit.arena.types import GroundColor
from swarmkit.errors import ConfigurationError
from swarmkit.numeric import wrap_angle
from swarmkit.robot.sensing import CensusFilter
from swarmkit.types import BoolArray, FloatArray, IntArray


class Variant(Enum):
    """
    Controller variant.

    ``BASELINE`` joins a site only next to a resting informed robot and
    leaves according to the change in informed neighbors since joining.
    ``SIMPLIFIED`` always joins and leaves according to the current number
    of resting neighbors of any kind.
    """

    BASELINE = "baseline"
    SIMPLIFIED = "simplified"

    @property
    def census_filter(self) -> CensusFilter:
        if self is Variant.BASELINE:
            return CensusFilter.RESTING_INFORMED_ONLY
        return CensusFilter.RESTING_ANY


class MacroState(IntEnum):
    RANDOM_WALK = 0
    STAY = 1
    LEAVE = 2


class CommandCode(IntEnum):
    FORWARD = 0
    TURN_TO = 1
    HALT = 2


NO_MEMORY: int = -1


@dataclass(frozen=True)
class ControllerParams:
    """
    Constants of the walk, the leave probabilities and the FSM timing.

    Parameters
    ----------
    a, k:
        Rate and offset of the baseline leave probability.
    alpha, beta:
        Scale and decay of the simplified leave probability.
    cauchy_rho:
        Concentration of the wrapped Cauchy turn-angle distribution.
    straight_duration:
        Length of a straight random-walk leg, seconds.
    entry_forward_duration:
        Forward motion after entering a site before resting, seconds.
    fsm_update_period:
        Cadence of probabilistic leave decisions, seconds.
    linear_speed:
        Forward speed, meters per second.
    """

    a: float = 2.0
    k: float = 18.0
    alpha: float = 0.5
    beta: float = 2.25
    cauchy_rho: float = 0.5
    straight_duration: float = 5.0
    entry_forward_duration: float = 10.0
    fsm_update_period: float = 2.0
    linear_speed: float = 0.1

    def __post_init__(self) -> None:
        self.check_args()

    def check_args(self) -> None:
        """
        Validate parameter ranges.

        Raises
        ------
        ConfigurationError
            If a value is nonfinite, ``cauchy_rho`` is outside ``(0, 1)``,
            ``alpha`` outside ``(0, 1]``, ``beta`` or a duration is not
            positive, or ``a``, ``k`` or ``linear_speed`` is negative.
        """
        for name in (
            "a", "k", "alpha", "beta", "cauchy_rho", "straight_duration",
            "entry_forward_duration", "fsm_update_period", "linear_speed",
        ):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, Real):
                raise ConfigurationError(name, "must be a real number")
            if not math.isfinite(value):
                raise ConfigurationError(name, "must be finite")

        if not 0.0 < self.cauchy_rho < 1.0:
            raise ConfigurationError("cauchy_rho", "must be in (0, 1)")

        if not 0.0 < self.alpha <= 1.0:
            raise ConfigurationError("alpha", "must be in (0, 1]")

        if self.beta <= 0.0:
            raise ConfigurationError("beta", "must be > 0")

        for name in ("a", "k", "linear_speed"):
            if getattr(self, name) < 0.0:
                raise ConfigurationError(name, "must be >= 0")

        for name in (
            "straight_duration", "entry_forward_duration", "fsm_update_period",
        ):
            if getattr(self, name) <= 0.0:
                raise ConfigurationError(name, "must be > 0")


# ---------------------------------------------------------------------------
# Per-robot controller state
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RandomWalk:
    """Exploring the arena in straight legs separated by random turns."""

    straight_time_left: float
    avoiding: bool = False

    macro: ClassVar[MacroState] = MacroState.RANDOM_WALK

    @property
    def broadcasting(self) -> bool:
        return False


@dataclass(frozen=True)
class Stay:
    """
    On a site: a forward entry phase, then resting.

    ``joined_census_x`` is the baseline census captured when a non-informed
    robot joined; ``None`` otherwise.
    """

    entry_time_left: float
    joined_census_x: int | None = None

    macro: ClassVar[MacroState] = MacroState.STAY

    @property
    def broadcasting(self) -> bool:
        return True


@dataclass(frozen=True)
class Leave:
    """Driving off the site until the floor turns grey."""

    macro: ClassVar[MacroState] = MacroState.LEAVE

    @property
    def broadcasting(self) -> bool:
        return False


ControllerState: TypeAlias = RandomWalk | Stay | Leave


# ---------------------------------------------------------------------------
# Motor commands
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Forward:
    code: ClassVar[CommandCode] = CommandCode.FORWARD


@dataclass(frozen=True)
class TurnTo:
    """Stop and rotate in place to ``new_heading``."""

    new_heading: float

    code: ClassVar[CommandCode] = CommandCode.TURN_TO

    def __post_init__(self) -> None:
        object.__setattr__(self, "new_heading", wrap_angle(float(self.new_heading)))


@dataclass(frozen=True)
class Halt:
    code: ClassVar[CommandCode] = CommandCode.HALT


MotorCommand: TypeAlias = Forward | TurnTo | Halt


@dataclass(frozen=True)
class Sensors:
    """
    One robot's readings for a tick.

    Parameters
    ----------
    ground:
        Floor color under the robot center.
    blocked:
        Forward obstacle detected.
    census:
        Qualifying broadcasters within communication range.
    heading:
        Current orientation in radians.
    """

    ground: GroundColor
    blocked: bool = False
    census: int = 0
    heading: float = 0.0


# ---------------------------------------------------------------------------
# Swarm-wide (structure of arrays) representation used by the engine
# ---------------------------------------------------------------------------

@dataclass
class SwarmControllerState:
    """
    Controller states of a whole swarm, one array entry per robot.

    Attributes
    ----------
    macro:
        ``MacroState`` codes.
    straight_left:
        Seconds left in the current random-walk leg.
    avoiding:
        Random walk interrupted by an obstacle turn.
    entry_left:
        Seconds left in the Stay entry phase.
    joined_x:
        Baseline census at join time, ``NO_MEMORY`` when unset.
    """

    macro: IntArray
    straight_left: FloatArray
    avoiding: BoolArray
    entry_left: FloatArray
    joined_x: IntArray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        n = self.macro.shape[0]
        if self.joined_x is None:
            self.joined_x = np.full(n, NO_MEMORY, dtype=np.int64)

    @classmethod
    def initial(cls, n: int, params: ControllerParams) -> "SwarmControllerState":
        """All robots in RandomWalk at the start of a straight leg."""
        return cls(
            macro=np.full(n, MacroState.RANDOM_WALK, dtype=np.int64),
            straight_left=np.full(n, params.straight_duration),
            avoiding=np.zeros(n, dtype=bool),
            entry_left=np.zeros(n),
            joined_x=np.full(n, NO_MEMORY, dtype=np.int64),
        )

    @classmethod
    def from_states(cls, states: list[ControllerState]) -> "SwarmControllerState":
        n = len(states)
        swarm = cls(
            macro=np.zeros(n, dtype=np.int64),
            straight_left=np.zeros(n),
            avoiding=np.zeros(n, dtype=bool),
            entry_left=np.zeros(n),
            joined_x=np.full(n, NO_MEMORY, dtype=np.int64),
        )
        for i, state in enumerate(states):
            swarm.macro[i] = state.macro
            if isinstance(state, RandomWalk):
                swarm.straight_left[i] = state.straight_time_left
                swarm.avoiding[i] = state.avoiding
            elif isinstance(state, Stay):
                swarm.entry_left[i] = state.entry_time_left
                if state.joined_census_x is not None:
                    swarm.joined_x[i] = state.joined_census_x
        return swarm

    @property
    def size(self) -> int:
        return self.macro.shape[0]

    @property
    def broadcasting(self) -> BoolArray:
        return self.macro == MacroState.STAY

    def copy(self) -> "SwarmControllerState":
        return SwarmControllerState(
            macro=self.macro.copy(),
            straight_left=self.straight_left.copy(),
            avoiding=self.avoiding.copy(),
            entry_left=self.entry_left.copy(),
            joined_x=self.joined_x.copy(),
        )

    def state_at(self, i: int) -> ControllerState:
        macro = MacroState(int(self.macro[i]))
        if macro is MacroState.RANDOM_WALK:
            return RandomWalk(
                straight_time_left=float(self.straight_left[i]),
                avoiding=bool(self.avoiding[i]),
            )
        if macro is MacroState.STAY:
            x = int(self.joined_x[i])
            return Stay(
                entry_time_left=float(self.entry_left[i]),
                joined_census_x=None if x == NO_MEMORY else x,
            )
        return Leave()


@dataclass
class MotorCommands:
    """Commands for a whole swarm: a ``CommandCode`` and target heading each."""

    code: IntArray
    new_heading: FloatArray

    def command_at(self, i: int) -> MotorCommand:
        code = CommandCode(int(self.code[i]))
        if code is CommandCode.FORWARD:
            return Forward()
        if code is CommandCode.TURN_TO:
            return TurnTo(float(self.new_heading[i]))
        return Halt()
