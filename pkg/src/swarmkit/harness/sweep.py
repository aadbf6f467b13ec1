# src/swarmkit/harness/sweep.py

"""
Parameter sweeps: repeated seeded trials over a grid of cells.

A cell is one combination of swarm size, informed proportion, black
proportion and variant. Trial seeds depend only on the base seed, the
cell's own parameters and the trial index, so adding or removing cells
never changes another cell's trials.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import product
from numbers import Integral
from typing import Callable, Iterable
import logging
import multiprocessing

import numpy as np

from swarmkit.arena.geometry import make_arena
from swarmkit.constants import TABLE1, TICK_DT, TRIAL_DURATION
from swarmkit.controller.types import ControllerParams, Variant
from swarmkit.engine.config import TrialConfig
from swarmkit.engine.simulation import run_trial
from swarmkit.errors import ConfigurationError
from swarmkit.robot.types import BodySpec

from .summary import SummaryTable, TrialFailure, TrialRecord, summarize_records


logger = logging.getLogger(__name__)

_VARIANT_CODES = {Variant.BASELINE: 0, Variant.SIMPLIFIED: 1}


@dataclass(frozen=True)
class CellKey:
    """One grid cell."""

    swarm_size: int
    rho_informed: float
    rho_black: float
    variant: Variant

    def entropy(self) -> list[int]:
        """Integer fingerprint of the cell for seed derivation."""
        return [
            int(self.swarm_size),
            int(round(self.rho_informed * 1_000_000)),
            int(round(self.rho_black * 1_000_000)),
            _VARIANT_CODES[self.variant],
        ]

    @property
    def label(self) -> str:
        return (
            f"N={self.swarm_size} rho_I={self.rho_informed:g} "
            f"rho_sb={self.rho_black:g} {self.variant.value}"
        )


def derive_seed(base_seed: int, cell: CellKey, trial_index: int) -> int:
    """
    Stable 64-bit trial seed from ``(base_seed, cell, trial_index)``.

    Uses ``numpy.random.SeedSequence`` hashing, which numpy keeps stable
    across releases.
    """
    sequence = np.random.SeedSequence(
        [int(base_seed), *cell.entropy(), int(trial_index)]
    )
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class SweepSpec:
    """
    Grid of cells and the number of trials per cell.

    Parameters
    ----------
    swarm_sizes, rho_informed_values, rho_black_values, variants:
        Axes of the grid; every combination is a cell.
    trials_per_cell:
        Independent trials per cell.
    base_seed:
        Root of all trial seeds.
    """

    swarm_sizes: tuple[int, ...] = TABLE1.swarm_sizes
    rho_informed_values: tuple[float, ...] = TABLE1.rho_informed_values
    rho_black_values: tuple[float, ...] = TABLE1.rho_black_values
    variants: tuple[Variant, ...] = (Variant.SIMPLIFIED, Variant.BASELINE)
    trials_per_cell: int = TABLE1.trials_per_cell
    base_seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "swarm_sizes", tuple(self.swarm_sizes))
        for name in ("rho_informed_values", "rho_black_values"):
            try:
                values = tuple(float(v) for v in getattr(self, name))
            except (TypeError, ValueError):
                raise ConfigurationError(name, "must contain numbers") from None
            object.__setattr__(self, name, values)
        try:
            object.__setattr__(
                self, "variants", tuple(Variant(v) for v in self.variants)
            )
        except ValueError as exc:
            raise ConfigurationError("variants", str(exc)) from None
        self.check_args()

    @classmethod
    def table1(cls, base_seed: int = 0) -> "SweepSpec":
        """The full standard grid, both variants."""
        return cls(base_seed=base_seed)

    def check_args(self) -> None:
        """Every axis non-empty and in range."""
        for name in (
            "swarm_sizes", "rho_informed_values", "rho_black_values", "variants",
        ):
            if len(getattr(self, name)) == 0:
                raise ConfigurationError(name, "must be non-empty")

        for n in self.swarm_sizes:
            if isinstance(n, bool) or not isinstance(n, Integral) or n < 1:
                raise ConfigurationError(
                    "swarm_sizes", "must contain positive integers"
                )

        for name in ("rho_informed_values", "rho_black_values"):
            for value in getattr(self, name):
                if not 0.0 <= value <= 1.0:
                    raise ConfigurationError(name, f"{value} out of [0,1]")

        if (
            isinstance(self.trials_per_cell, bool)
            or not isinstance(self.trials_per_cell, Integral)
            or self.trials_per_cell < 1
        ):
            raise ConfigurationError("trials_per_cell", "must be >= 1")

        if (
            isinstance(self.base_seed, bool)
            or not isinstance(self.base_seed, Integral)
            or self.base_seed < 0
        ):
            raise ConfigurationError("base_seed", "must be a non-negative integer")

    def cells(self) -> list[CellKey]:
        return [
            CellKey(n, rho_i, rho_b, variant)
            for n, variant, rho_i, rho_b in product(
                self.swarm_sizes,
                self.variants,
                self.rho_informed_values,
                self.rho_black_values,
            )
        ]

    @property
    def n_cells(self) -> int:
        return len(self.cells())

    @property
    def n_trials(self) -> int:
        return self.n_cells * self.trials_per_cell


@dataclass(frozen=True)
class SharedSettings:
    """
    Settings common to every trial of a sweep.

    ``arena_diameter`` and ``site_diameter`` override the presets for all
    swarm sizes and are needed for sizes without a preset.
    """

    body: BodySpec = field(default_factory=BodySpec)
    controller: ControllerParams = field(default_factory=ControllerParams)
    duration: float = TRIAL_DURATION
    tick_dt: float = TICK_DT
    arena_diameter: float | None = None
    site_diameter: float | None = None
    max_placement_attempts: int = 1000

    def trial_config(self, cell: CellKey, seed: int) -> TrialConfig:
        return TrialConfig(
            swarm_size=cell.swarm_size,
            rho_informed=cell.rho_informed,
            rho_black=cell.rho_black,
            variant=cell.variant,
            arena=make_arena(
                cell.swarm_size, self.arena_diameter, self.site_diameter
            ),
            body=self.body,
            controller=self.controller,
            duration=self.duration,
            tick_dt=self.tick_dt,
            seed=seed,
            timeseries_interval=None,
            max_placement_attempts=self.max_placement_attempts,
        )


@dataclass(frozen=True)
class _Task:
    cell: CellKey
    trial_index: int
    seed: int
    shared: SharedSettings


def _execute(task: _Task) -> TrialRecord | TrialFailure:
    """Run one trial; exceptions become a failure record."""
    try:
        result = run_trial(task.shared.trial_config(task.cell, task.seed))
    except Exception as exc:  # noqa: BLE001 - reported per trial
        return TrialFailure(
            swarm_size=task.cell.swarm_size,
            rho_informed=task.cell.rho_informed,
            rho_black=task.cell.rho_black,
            variant=task.cell.variant.value,
            trial_index=task.trial_index,
            seed=task.seed,
            error_type=type(exc).__name__,
            message=str(exc),
        )

    return TrialRecord(
        swarm_size=task.cell.swarm_size,
        rho_informed=task.cell.rho_informed,
        rho_black=task.cell.rho_black,
        variant=task.cell.variant.value,
        trial_index=task.trial_index,
        seed=task.seed,
        black=result.robots_on_black,
        white=result.robots_on_white,
        elsewhere=result.robots_elsewhere,
    )


def plan_tasks(
    spec: SweepSpec,
    shared: SharedSettings,
    completed: Iterable[TrialRecord] = (),
) -> list[_Task]:
    """Trials of ``spec`` not already present in ``completed``."""
    done = {record.key for record in completed}
    tasks = []
    for cell in spec.cells():
        for trial_index in range(spec.trials_per_cell):
            seed = derive_seed(spec.base_seed, cell, trial_index)
            key = TrialRecord.make_key(
                cell.swarm_size, cell.rho_informed, cell.rho_black,
                cell.variant.value, trial_index, seed,
            )
            if key not in done:
                tasks.append(_Task(cell, trial_index, seed, shared))
    return tasks


def run_sweep(
    spec: SweepSpec,
    shared: SharedSettings | None = None,
    *,
    workers: int = 1,
    completed: Iterable[TrialRecord] = (),
    on_result: Callable[[TrialRecord | TrialFailure], None] | None = None,
) -> SummaryTable:
    """
    Run every trial of ``spec`` and aggregate per cell.

    Parameters
    ----------
    spec:
        Grid and trial count.
    shared:
        Settings common to all trials.
    workers:
        Worker processes; ``1`` runs in-process.
    completed:
        Records from an earlier, interrupted run. Matching trials are
        skipped and the records reused.
    on_result:
        Called in the parent process for each new record or failure, in
        completion order.

    Returns
    -------
    SummaryTable
        Per-cell medians and IQRs plus every raw record and failure.
    """
    shared = shared or SharedSettings()
    cells = spec.cells()
    wanted = {
        TrialRecord.make_key(
            c.swarm_size, c.rho_informed, c.rho_black, c.variant.value,
            t, derive_seed(spec.base_seed, c, t),
        )
        for c in cells
        for t in range(spec.trials_per_cell)
    }
    reused = [r for r in completed if r.key in wanted]
    tasks = plan_tasks(spec, shared, reused)

    logger.info(
        "sweep: %d cells, %d trials, %d reused, %d to run, %d worker(s)",
        len(cells), spec.n_trials, len(reused), len(tasks), workers,
    )

    records: list[TrialRecord] = list(reused)
    failures: list[TrialFailure] = []

    pending: dict[tuple, int] = {}
    for task in tasks:
        key = (task.cell.swarm_size, task.cell.rho_informed,
               task.cell.rho_black, task.cell.variant.value)
        pending[key] = pending.get(key, 0) + 1
    n_pending_cells = len(pending)

    def collect(outcome: TrialRecord | TrialFailure) -> None:
        pending[outcome.cell] -= 1
        if pending[outcome.cell] == 0:
            done = n_pending_cells - sum(1 for left in pending.values() if left)
            logger.info(
                "cell done (%d/%d): N=%d rho_I=%g rho_sb=%g %s",
                done, n_pending_cells, *outcome.cell,
            )
        if isinstance(outcome, TrialFailure):
            logger.warning(
                "trial failed: %s trial=%d seed=%d: %s: %s",
                outcome.cell_label, outcome.trial_index, outcome.seed,
                outcome.error_type, outcome.message,
            )
            failures.append(outcome)
        else:
            records.append(outcome)
        if on_result is not None:
            on_result(outcome)

    if workers <= 1 or len(tasks) <= 1:
        for task in tasks:
            collect(_execute(task))
    else:
        with multiprocessing.Pool(processes=workers) as pool:
            for outcome in pool.imap_unordered(_execute, tasks):
                collect(outcome)

    return summarize_records(records, failures)


def sweep_definition(spec: SweepSpec) -> dict:
    """Plain description of a sweep, for logging and provenance."""
    payload = asdict(spec)
    payload["variants"] = [v.value for v in spec.variants]
    payload["n_cells"] = spec.n_cells
    payload["n_trials"] = spec.n_trials
    return payload
