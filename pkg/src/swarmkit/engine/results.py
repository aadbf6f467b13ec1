# src/swarmkit/engine/results.py

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import pandas as pd

from swarmkit.arena.types import SiteId
from swarmkit.controller.types import MacroState
from swarmkit.robot.types import RobotKind


@dataclass(frozen=True)
class RobotFinal:
    """
    One robot at the end of a trial.

    Parameters
    ----------
    kind:
        Robot population.
    macro:
        Controller macro-state.
    site:
        Site strictly containing the robot center, ``None`` off-site.
    """

    kind: RobotKind
    macro: MacroState
    site: SiteId | None


@dataclass(frozen=True)
class OccupancySample:
    """Site occupancy at one instant."""

    time: float
    black: int
    white: int
    staying: int


@dataclass(frozen=True)
class TrialResult:
    """
    Final site occupancy of a trial.

    Parameters
    ----------
    robots_on_black, robots_on_white, robots_elsewhere:
        Robot counts by final position; they sum to the swarm size.
    robots_staying:
        Robots in the Stay macro-state at the end.
    per_robot_final:
        Final kind, macro-state and site of each robot, by index.
    occupancy_timeseries:
        Periodic occupancy samples, first at ``t = 0`` and last at the
        end of the trial; ``None`` when sampling is disabled.
    """

    robots_on_black: int
    robots_on_white: int
    robots_elsewhere: int
    robots_staying: int
    per_robot_final: tuple[RobotFinal, ...]
    occupancy_timeseries: tuple[OccupancySample, ...] | None = None

    @property
    def swarm_size(self) -> int:
        return len(self.per_robot_final)

    @property
    def max_staying(self) -> int:
        """Most robots in Stay at any recorded sample, or at the end."""
        if not self.occupancy_timeseries:
            return self.robots_staying
        return max(sample.staying for sample in self.occupancy_timeseries)

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready representation with stable key order."""
        payload: dict[str, Any] = {
            "robots_on_black": self.robots_on_black,
            "robots_on_white": self.robots_on_white,
            "robots_elsewhere": self.robots_elsewhere,
            "robots_staying": self.robots_staying,
            "per_robot_final": [
                {
                    "kind": robot.kind.name.lower(),
                    "macro_state": robot.macro.name.lower(),
                    "site": None if robot.site is None else robot.site.name.lower(),
                }
                for robot in self.per_robot_final
            ],
        }
        if self.occupancy_timeseries is not None:
            payload["occupancy_timeseries"] = [
                [s.time, s.black, s.white, s.staying]
                for s in self.occupancy_timeseries
            ]
        return payload

    def timeseries_frame(self) -> pd.DataFrame:
        """Occupancy samples as a table with columns time, black, white, staying."""
        samples = self.occupancy_timeseries or ()
        return pd.DataFrame(
            [(s.time, s.black, s.white, s.staying) for s in samples],
            columns=["time", "black", "white", "staying"],
        )
