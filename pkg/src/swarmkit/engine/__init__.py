from .config import TrialConfig, round_half_up
from .results import RobotFinal, OccupancySample, TrialResult
from .simulation import (
    SimulationState,
    init_trial,
    tick,
    run_trial,
    resolve_moves,
    entry_overruns,
    summarize,
)
from .trajectory import TrajectoryRecorder

__all__ = [
    "TrialConfig",
    "round_half_up",
    "RobotFinal",
    "OccupancySample",
    "TrialResult",
    "SimulationState",
    "init_trial",
    "tick",
    "run_trial",
    "resolve_moves",
    "entry_overruns",
    "summarize",
    "TrajectoryRecorder",
]
