# src/swarmkit/engine/simulation.py

"""
Fixed-timestep trial executor.

Each tick reads every sensor from a snapshot of the swarm taken before any
state changes, steps all controllers, and then applies the motor commands.
Forward moves that would overlap another robot or cross the wall are
cancelled; the robot stays put and its own obstacle sensor takes over on
the next tick. An informed robot whose entry step would carry it off
its preferred site ends the entry leg at the rim instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import logging

import numpy as np
from scipy.spatial.distance import cdist

from swarmkit.arena.geometry import ground_readings, inside_arena, site_labels
from swarmkit.arena.types import ArenaSpec, NO_SITE, SiteId
from swarmkit.controller.pfsm import census_readers, step_swarm
from swarmkit.controller.types import (
    CommandCode,
    MacroState,
    SwarmControllerState,
)
from swarmkit.errors import PlacementError
from swarmkit.robot.kinematics import advance_positions, blocked_mask
from swarmkit.robot.sensing import census_counts
from swarmkit.robot.types import RobotKind, RobotPose, RobotRecord
from swarmkit.types import BoolArray, FloatArray, IntArray

from .config import TrialConfig
from .results import OccupancySample, RobotFinal, TrialResult


logger = logging.getLogger(__name__)


@dataclass
class SimulationState:
    """
    Mutable state of one running trial.

    Attributes
    ----------
    config:
        Trial definition.
    positions:
        Robot centers, shape ``(N, 2)``.
    headings:
        Robot headings, shape ``(N,)``.
    kinds:
        ``RobotKind`` codes, shape ``(N,)``.
    controller:
        Controller states of the swarm.
    rng:
        The trial's single random stream.
    tick_index:
        Ticks executed so far.
    fsm_updates:
        FSM update boundaries passed so far.
    """

    config: TrialConfig
    positions: FloatArray
    headings: FloatArray
    kinds: IntArray
    controller: SwarmControllerState
    rng: np.random.Generator
    tick_index: int = 0
    fsm_updates: int = 0
    occupancy: list[OccupancySample] = field(default_factory=list)

    @property
    def arena(self) -> ArenaSpec:
        return self.config.arena

    @property
    def time(self) -> float:
        return self.tick_index * self.config.tick_dt

    @property
    def size(self) -> int:
        return self.positions.shape[0]

    def records(self) -> list[RobotRecord]:
        """Read-only per-robot snapshot."""
        return [
            RobotRecord(
                robot_id=i,
                pose=RobotPose(
                    position=(self.positions[i, 0], self.positions[i, 1]),
                    heading=self.headings[i],
                ),
                kind=RobotKind(int(self.kinds[i])),
                state=self.controller.state_at(i),
            )
            for i in range(self.size)
        ]

    def occupancy_sample(self) -> OccupancySample:
        labels = site_labels(self.arena, self.positions)
        return OccupancySample(
            time=self.time,
            black=int(np.count_nonzero(labels == SiteId.BLACK)),
            white=int(np.count_nonzero(labels == SiteId.WHITE)),
            staying=int(np.count_nonzero(self.controller.broadcasting)),
        )


def assign_kinds(config: TrialConfig) -> IntArray:
    """Black-informed first, then white-informed, then non-informed."""
    return np.concatenate([
        np.full(config.n_black, RobotKind.INFORMED_BLACK, dtype=np.int64),
        np.full(config.n_white, RobotKind.INFORMED_WHITE, dtype=np.int64),
        np.full(config.n_non_informed, RobotKind.NON_INFORMED, dtype=np.int64),
    ])


def place_robots(config: TrialConfig, rng: np.random.Generator) -> FloatArray:
    """
    Uniform non-overlapping placement by rejection sampling.

    Raises
    ------
    PlacementError
        If a robot cannot be placed within ``max_placement_attempts``.
    """
    n = config.swarm_size
    body_radius = config.body.body_radius
    reach = config.arena.arena_radius - body_radius
    min_gap = 2.0 * body_radius

    positions = np.empty((n, 2))

    for i in range(n):
        for _ in range(config.max_placement_attempts):
            r = reach * np.sqrt(rng.random())
            phi = 2.0 * np.pi * rng.random()
            candidate = np.array([r * np.cos(phi), r * np.sin(phi)])

            if i == 0 or np.all(
                np.hypot(*(positions[:i] - candidate).T) > min_gap
            ):
                positions[i] = candidate
                break
        else:
            logger.error(
                "placement failed for robot %d of %d (seed=%d)",
                i, n, config.seed,
            )
            raise PlacementError(
                f"could not place robot {i} of {n} after "
                f"{config.max_placement_attempts} attempts"
            )

    return positions


def init_trial(config: TrialConfig) -> SimulationState:
    """
    Place the swarm and set every controller to RandomWalk.

    All randomness of the trial, placement included, comes from one
    ``numpy.random.Generator`` seeded with ``config.seed``.
    """
    rng = np.random.default_rng(config.seed)

    positions = place_robots(config, rng)
    headings = rng.uniform(-np.pi, np.pi, config.swarm_size)

    return SimulationState(
        config=config,
        positions=positions,
        headings=headings,
        kinds=assign_kinds(config),
        controller=SwarmControllerState.initial(
            config.swarm_size, config.controller
        ),
        rng=rng,
    )


def resolve_moves(
    positions: FloatArray,
    movers: BoolArray,
    targets: FloatArray,
    arena: ArenaSpec,
    body_radius: float,
) -> FloatArray:
    """
    Apply forward moves that keep every robot clear of walls and others.

    A move is cancelled when its target overlaps any other robot's
    snapshot position or crosses the wall, and then when two surviving
    targets overlap each other. One pass suffices: a cancelled robot
    returns to a snapshot position every surviving target was already
    checked against.

    Parameters
    ----------
    positions:
        Snapshot positions, shape ``(N, 2)``.
    movers:
        Robots commanded forward.
    targets:
        Target positions of the movers, shape ``(M, 2)``.

    Returns
    -------
    numpy.ndarray
        Positions after the tick.
    """
    final = positions.copy()
    mover_index = np.flatnonzero(movers)
    if mover_index.size == 0:
        return final

    min_gap = 2.0 * body_radius

    gaps = cdist(targets, positions)
    gaps[np.arange(mover_index.size), mover_index] = np.inf

    ok = np.all(gaps >= min_gap, axis=1)
    ok &= inside_arena(arena, targets, margin=body_radius)

    if np.count_nonzero(ok) > 1:
        survivors = np.flatnonzero(ok)
        mutual = cdist(targets[survivors], targets[survivors])
        np.fill_diagonal(mutual, np.inf)
        ok[survivors[np.any(mutual < min_gap, axis=1)]] = False

    final[mover_index[ok]] = targets[ok]
    return final


def entry_overruns(
    kinds: IntArray,
    entering: BoolArray,
    targets: FloatArray,
    arena: ArenaSpec,
) -> BoolArray:
    """
    Entering informed robots whose next step would leave their site.

    Parameters
    ----------
    kinds:
        ``RobotKind`` codes of the movers, shape ``(M,)``.
    entering:
        Movers in the entry leg of Stay, shape ``(M,)``.
    targets:
        Target positions of the movers, shape ``(M, 2)``.

    Returns
    -------
    numpy.ndarray
        Boolean mask over the movers.
    """
    kinds = np.asarray(kinds)
    preferred = np.select(
        [kinds == RobotKind.INFORMED_BLACK, kinds == RobotKind.INFORMED_WHITE],
        [SiteId.BLACK, SiteId.WHITE],
        default=NO_SITE,
    )
    informed = preferred != NO_SITE
    return entering & informed & (site_labels(arena, targets) != preferred)


def tick(state: SimulationState) -> SimulationState:
    """
    Advance the trial by one timestep.

    The state is updated in place and returned.
    """
    config = state.config
    arena = config.arena
    body = config.body
    params = config.controller

    # sensors from the snapshot
    positions = state.positions
    distances = cdist(positions, positions)

    fsm_tick = (state.tick_index + 1) % config.ticks_per_fsm_update == 0

    ground = ground_readings(arena, positions)
    blocked = blocked_mask(positions, state.headings, arena, body)
    census = census_counts(
        positions,
        state.controller.broadcasting,
        state.kinds,
        config.variant.census_filter,
        body.comm_range,
        distances=distances,
        occluder_radius=body.occluder_radius,
        observers=census_readers(state.controller, ground, fsm_tick=fsm_tick),
    )

    controller, commands = step_swarm(
        state.controller,
        kinds=state.kinds,
        variant=config.variant,
        ground=ground,
        blocked=blocked,
        census=census,
        headings=state.headings,
        params=params,
        rng=state.rng,
        dt=config.tick_dt,
        fsm_tick=fsm_tick,
    )

    # motor commands
    turning = commands.code == CommandCode.TURN_TO
    headings = state.headings.copy()
    headings[turning] = commands.new_heading[turning]

    movers = commands.code == CommandCode.FORWARD
    targets = advance_positions(
        positions[movers],
        headings[movers],
        params.linear_speed * config.tick_dt,
    )

    # informed robots end the entry leg at the rim of their site
    entering = (controller.macro == MacroState.STAY) & movers
    held = entry_overruns(
        state.kinds[movers], entering[movers], targets, arena
    )
    if held.any():
        stopped = np.flatnonzero(movers)[held]
        controller.entry_left[stopped] = 0.0
        movers[stopped] = False
        targets = targets[~held]

    state.positions = resolve_moves(
        positions, movers, targets, arena, body.body_radius
    )
    state.headings = headings
    state.controller = controller
    state.tick_index += 1
    if fsm_tick:
        state.fsm_updates += 1

    return state


def summarize(state: SimulationState) -> TrialResult:
    """Count robots by the site containing their final position."""
    labels = site_labels(state.arena, state.positions)

    per_robot = tuple(
        RobotFinal(
            kind=RobotKind(int(state.kinds[i])),
            macro=MacroState(int(state.controller.macro[i])),
            site=None if labels[i] == NO_SITE else SiteId(int(labels[i])),
        )
        for i in range(state.size)
    )

    on_black = int(np.count_nonzero(labels == SiteId.BLACK))
    on_white = int(np.count_nonzero(labels == SiteId.WHITE))

    timeseries = None
    if state.config.timeseries_interval is not None:
        timeseries = tuple(state.occupancy)

    return TrialResult(
        robots_on_black=on_black,
        robots_on_white=on_white,
        robots_elsewhere=state.size - on_black - on_white,
        robots_staying=int(np.count_nonzero(state.controller.broadcasting)),
        per_robot_final=per_robot,
        occupancy_timeseries=timeseries,
    )


def run_trial(config: TrialConfig, recorder=None) -> TrialResult:
    """
    Run a trial to completion.

    The result is a pure function of ``config``, seed included.

    Parameters
    ----------
    config:
        Trial definition.
    recorder:
        Optional ``TrajectoryRecorder`` fed after placement and after
        every tick.

    Raises
    ------
    PlacementError
        If the initial placement fails.
    """
    logger.info(
        "trial start: N=%d rho_I=%.3g rho_sb=%.3g variant=%s seed=%d",
        config.swarm_size, config.rho_informed, config.rho_black,
        config.variant.value, config.seed,
    )

    state = init_trial(config)
    sample_every = config.ticks_per_sample
    n_ticks = config.n_ticks

    if sample_every is not None:
        state.occupancy.append(state.occupancy_sample())
    if recorder is not None:
        recorder.observe(state)

    for _ in range(n_ticks):
        tick(state)

        if sample_every is not None and (
            state.tick_index % sample_every == 0
            or state.tick_index == n_ticks
        ):
            state.occupancy.append(state.occupancy_sample())
        if recorder is not None:
            recorder.observe(state)

    result = summarize(state)

    logger.info(
        "trial end: seed=%d black=%d white=%d elsewhere=%d",
        config.seed, result.robots_on_black, result.robots_on_white,
        result.robots_elsewhere,
    )
    return result
