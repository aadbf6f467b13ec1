# src/swarmkit/robot/types.py

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from numbers import Real
from typing import TYPE_CHECKING
import math

from swarmkit.errors import ConfigurationError
from swarmkit.numeric import wrap_angle
from swarmkit.types import Point

if TYPE_CHECKING:
    from swarmkit.controller.types import ControllerState
    from swarmkit.arena.types import SiteId


class RobotKind(IntEnum):
    """
    Robot population.

    Informed robots rest only on their preferred site; non-informed robots
    treat both sites alike.
    """

    NON_INFORMED = 0
    INFORMED_BLACK = 1
    INFORMED_WHITE = 2

    @property
    def informed(self) -> bool:
        return self is not RobotKind.NON_INFORMED

    @property
    def preferred_site(self) -> "SiteId | None":
        from swarmkit.arena.types import SiteId

        if self is RobotKind.INFORMED_BLACK:
            return SiteId.BLACK
        if self is RobotKind.INFORMED_WHITE:
            return SiteId.WHITE
        return None


@dataclass(frozen=True)
class RobotPose:
    """
    Planar robot pose.

    Parameters
    ----------
    position:
        Center of the robot in meters.
    heading:
        Orientation in radians, wrapped to ``[-pi, pi)`` on construction.
    """

    position: Point
    heading: float = 0.0

    def __post_init__(self) -> None:
        x, y = self.position
        object.__setattr__(self, "position", (float(x), float(y)))
        object.__setattr__(self, "heading", wrap_angle(float(self.heading)))


@dataclass(frozen=True)
class BodySpec:
    """
    Physical footprint and sensing ranges of a robot.

    Parameters
    ----------
    body_radius:
        Radius of the robot disc in meters.
    proximity_range:
        Look-ahead distance of the obstacle sensor in meters.
    comm_range:
        Range of the presence signal exchanged between resting robots,
        in meters.
    line_of_sight:
        Whether robot bodies block the presence signal.
    """

    body_radius: float = 0.085
    proximity_range: float = 0.1
    comm_range: float = 0.8
    line_of_sight: bool = True

    def __post_init__(self) -> None:
        self.check_args()

    def check_args(self) -> None:
        """Validate the lengths and the occlusion switch."""
        for name in ("body_radius", "proximity_range", "comm_range"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, Real):
                raise ConfigurationError(name, "must be a real number")
            if not math.isfinite(value) or value <= 0.0:
                raise ConfigurationError(name, "must be positive and finite")

        if not isinstance(self.line_of_sight, bool):
            raise ConfigurationError("line_of_sight", "must be a boolean")

    @property
    def occluder_radius(self) -> float | None:
        """Body radius for census occlusion, ``None`` when disabled."""
        return self.body_radius if self.line_of_sight else None


@dataclass(frozen=True)
class RobotRecord:
    """
    Read-only snapshot of one robot.

    Parameters
    ----------
    robot_id:
        Index of the robot in its trial.
    pose:
        Current pose.
    kind:
        Robot population.
    state:
        Controller state; robots in Stay broadcast their presence.
    """

    robot_id: int
    pose: RobotPose
    kind: RobotKind
    state: "ControllerState"

    @property
    def broadcasting(self) -> bool:
        return self.state.broadcasting
