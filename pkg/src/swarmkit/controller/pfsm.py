# src/swarmkit/controller/pfsm.py

"""
Three-state probabilistic finite-state machine: RandomWalk, Stay, Leave.

``step_swarm`` advances every robot of a swarm by one tick and is what the
engine calls. ``step_controller`` runs the same kernel for a single robot.

A tick has two phases. Transitions are resolved first from the sensor
readings; the command is then produced by the behavior of the state the
robot ends up in, so a robot that joins a site already drives its first
entry step on the same tick.

Random draws are taken from the trial stream in a fixed order per tick:

1. on FSM update ticks, one uniform per robot for the leave decisions;
2. one uniform turn angle per robot turning away from an obstacle,
   in robot-index order;
3. one wrapped Cauchy angle per robot ending a straight leg,
   in robot-index order.
"""

from __future__ import annotations

import numpy as np

from swarmkit.arena.types import GroundColor
from swarmkit.numeric import wrap_angle
from swarmkit.robot.types import RobotKind
from swarmkit.types import BoolArray, FloatArray, IntArray

from .distributions import sample_turn_angle
from .probabilities import p_leave_baseline, p_leave_simplified
from .types import (
    CommandCode,
    ControllerParams,
    ControllerState,
    MacroState,
    MotorCommand,
    MotorCommands,
    NO_MEMORY,
    Sensors,
    SwarmControllerState,
    Variant,
)


def step_swarm(
    state: SwarmControllerState,
    kinds: IntArray,
    variant: Variant,
    ground: FloatArray,
    blocked: BoolArray,
    census: IntArray,
    headings: FloatArray,
    params: ControllerParams,
    rng: np.random.Generator,
    dt: float,
    *,
    fsm_tick: bool,
) -> tuple[SwarmControllerState, MotorCommands]:
    """
    Advance every controller by one tick.

    Parameters
    ----------
    state:
        Controller states before the tick; not modified.
    kinds:
        ``RobotKind`` codes.
    variant:
        Controller variant.
    ground:
        Ground-sensor readings (0.0 black, 0.5 grey, 1.0 white).
    blocked:
        Forward obstacle flags.
    census:
        Broadcaster counts under the variant's census filter.
    headings:
        Current headings in radians.
    params:
        Controller constants.
    rng:
        Trial random stream.
    dt:
        Tick length in seconds.
    fsm_tick:
        Whether this tick closes an FSM update period; leave decisions
        are drawn only then.

    Returns
    -------
    tuple[SwarmControllerState, MotorCommands]
        New controller states and the commands for this tick.
    """
    new = state.copy()
    n = new.size
    eps = 0.5 * dt

    kinds = np.asarray(kinds)
    ground = np.asarray(ground, dtype=np.float64)
    blocked = np.asarray(blocked, dtype=bool)
    census = np.asarray(census, dtype=np.int64)

    informed = kinds != RobotKind.NON_INFORMED
    on_black = ground == GroundColor.BLACK.reading
    on_white = ground == GroundColor.WHITE.reading
    on_site = on_black | on_white
    on_preferred = (
        ((kinds == RobotKind.INFORMED_BLACK) & on_black)
        | ((kinds == RobotKind.INFORMED_WHITE) & on_white)
    )

    # --- RandomWalk -> Stay
    was_walking = state.macro == MacroState.RANDOM_WALK

    joins_uninformed = on_site & ~informed
    if variant is Variant.BASELINE:
        joins_uninformed &= census >= 1

    join = was_walking & ((informed & on_preferred) | joins_uninformed)

    new.macro[join] = MacroState.STAY
    new.entry_left[join] = params.entry_forward_duration
    new.avoiding[join] = False

    if variant is Variant.BASELINE:
        memorize = join & ~informed
        new.joined_x[memorize] = census[memorize]

    # --- Stay: drifting off-site during entry, or a probabilistic leave
    was_staying = state.macro == MacroState.STAY
    in_entry = was_staying & (state.entry_left > eps)

    # informed robots never exit Stay; off their site they end the entry leg
    drift = in_entry & ~on_site & ~informed
    overrun = in_entry & informed & ~on_preferred
    new.entry_left[overrun] = 0.0
    resting = was_staying & ~in_entry & ~informed

    leave = np.zeros(n, dtype=bool)
    if fsm_tick:
        u = rng.random(n)
        if variant is Variant.BASELINE:
            x = np.where(new.joined_x == NO_MEMORY, 0, new.joined_x)
            p = p_leave_baseline(census, x, params.a, params.k)
        else:
            p = p_leave_simplified(census, params.alpha, params.beta)
        leave = resting & (u < p)

    new.macro[leave] = MacroState.LEAVE
    new.joined_x[leave] = NO_MEMORY

    # --- Leave -> RandomWalk once off the site
    exit_site = (state.macro == MacroState.LEAVE) & ~on_site

    back_to_walk = drift | exit_site
    new.macro[back_to_walk] = MacroState.RANDOM_WALK
    new.straight_left[back_to_walk] = params.straight_duration
    new.avoiding[back_to_walk] = False
    new.entry_left[back_to_walk] = 0.0
    new.joined_x[back_to_walk] = NO_MEMORY

    # --- behaviors of the resulting states
    code = np.full(n, CommandCode.HALT, dtype=np.int64)
    new_heading = np.asarray(headings, dtype=np.float64).copy()

    staying = new.macro == MacroState.STAY
    entering = staying & (new.entry_left > eps)
    code[entering] = CommandCode.FORWARD
    new.entry_left[entering] = np.maximum(new.entry_left[entering] - dt, 0.0)

    leaving = new.macro == MacroState.LEAVE
    walking = new.macro == MacroState.RANDOM_WALK

    evading = (leaving | walking) & blocked
    new.avoiding[walking & blocked] = True

    n_evading = int(np.count_nonzero(evading))
    if n_evading:
        angles = rng.uniform(-np.pi, np.pi, n_evading)
        new_heading[evading] = wrap_angle(new_heading[evading] + angles)
        code[evading] = CommandCode.TURN_TO

    code[leaving & ~blocked] = CommandCode.FORWARD

    free = walking & ~blocked

    # leg timer restarts after an avoidance manoeuvre
    resume = free & new.avoiding
    new.straight_left[resume] = params.straight_duration
    new.avoiding[resume] = False

    leg_over = free & (new.straight_left <= eps)
    n_turning = int(np.count_nonzero(leg_over))
    if n_turning:
        angles = sample_turn_angle(0.0, params.cauchy_rho, rng, size=n_turning)
        new_heading[leg_over] = wrap_angle(new_heading[leg_over] + angles)
        code[leg_over] = CommandCode.TURN_TO
        new.straight_left[leg_over] = params.straight_duration

    straight = free & ~leg_over
    code[straight] = CommandCode.FORWARD
    new.straight_left[straight] -= dt

    return new, MotorCommands(code=code, new_heading=new_heading)


def census_readers(
    state: SwarmControllerState,
    ground: FloatArray,
    *,
    fsm_tick: bool,
) -> BoolArray:
    """
    Robots whose transitions read the census on this tick.

    A walking robot on a site reads it for the join guard and the
    baseline join memory; on FSM update ticks every robot in Stay reads
    it for the leave draw.
    """
    on_site = np.asarray(ground) != GroundColor.GREY.reading
    readers = (state.macro == MacroState.RANDOM_WALK) & on_site
    if fsm_tick:
        readers |= state.macro == MacroState.STAY
    return readers


def step_controller(
    state: ControllerState,
    kind: RobotKind,
    variant: Variant,
    sensors: Sensors,
    params: ControllerParams,
    rng: np.random.Generator,
    dt: float,
    *,
    fsm_tick: bool = True,
) -> tuple[ControllerState, MotorCommand]:
    """
    Advance one robot's controller by one tick.

    Same rules and random-draw order as ``step_swarm`` for a swarm of one.

    Returns
    -------
    tuple[ControllerState, MotorCommand]
        Next state and this tick's command.
    """
    swarm_state = SwarmControllerState.from_states([state])

    new, commands = step_swarm(
        swarm_state,
        kinds=np.array([int(kind)], dtype=np.int64),
        variant=variant,
        ground=np.array([sensors.ground.reading]),
        blocked=np.array([sensors.blocked]),
        census=np.array([sensors.census], dtype=np.int64),
        headings=np.array([sensors.heading]),
        params=params,
        rng=rng,
        dt=dt,
        fsm_tick=fsm_tick,
    )
    return new.state_at(0), commands.command_at(0)
