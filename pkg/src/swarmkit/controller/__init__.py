from .types import (
    Variant,
    MacroState,
    CommandCode,
    ControllerParams,
    RandomWalk,
    Stay,
    Leave,
    ControllerState,
    Forward,
    TurnTo,
    Halt,
    MotorCommand,
    Sensors,
    SwarmControllerState,
    MotorCommands,
    NO_MEMORY,
)
from .distributions import wrapped_cauchy_pdf, sample_turn_angle
from .probabilities import p_leave_baseline, p_leave_simplified
from .pfsm import census_readers, step_swarm, step_controller

__all__ = [
    "Variant",
    "MacroState",
    "CommandCode",
    "ControllerParams",
    "RandomWalk",
    "Stay",
    "Leave",
    "ControllerState",
    "Forward",
    "TurnTo",
    "Halt",
    "MotorCommand",
    "Sensors",
    "SwarmControllerState",
    "MotorCommands",
    "NO_MEMORY",
    "wrapped_cauchy_pdf",
    "sample_turn_angle",
    "p_leave_baseline",
    "p_leave_simplified",
    "census_readers",
    "step_swarm",
    "step_controller",
]
