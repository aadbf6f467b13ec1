# src/swarmkit/engine/trajectory.py

from __future__ import annotations

from pathlib import Path
import logging

import numpy as np
import pandas as pd

from swarmkit.controller.types import MacroState


logger = logging.getLogger(__name__)

COLUMNS = ["robot_id", "t", "x", "y", "macro_state"]


class TrajectoryRecorder:
    """
    Periodic dump of every robot's position and macro-state.

    Parameters
    ----------
    interval:
        Seconds between samples; must be a multiple of the trial's
        ``tick_dt``. The initial placement is always recorded.
    """

    def __init__(self, interval: float = 10.0) -> None:
        if not interval > 0.0:
            raise ValueError("interval must be > 0.")

        self.interval: float = float(interval)
        self._frames: list[pd.DataFrame] = []

    def observe(self, state) -> None:
        """Record ``state`` if it falls on the sampling grid."""
        every = max(1, int(round(self.interval / state.config.tick_dt)))
        if state.tick_index % every != 0:
            return

        n = state.size
        self._frames.append(
            pd.DataFrame({
                "robot_id": np.arange(n),
                "t": np.full(n, state.time),
                "x": state.positions[:, 0],
                "y": state.positions[:, 1],
                "macro_state": [
                    MacroState(int(code)).name.lower()
                    for code in state.controller.macro
                ],
            })
        )

    def to_frame(self) -> pd.DataFrame:
        if not self._frames:
            return pd.DataFrame(columns=COLUMNS)
        return pd.concat(self._frames, ignore_index=True)

    def write_csv(self, path: str | Path) -> Path:
        path = Path(path)
        self.to_frame().to_csv(path, index=False)
        logger.debug("wrote trajectory %s", path)
        return path
