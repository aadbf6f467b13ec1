# src/swarmkit/harness/summary.py

"""Raw trial records and their per-cell aggregation."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from typing import Any, Iterable, Literal

import pandas as pd

from .statistics import median_and_iqr


TrialKey = tuple[int, float, float, str, int, int]

Site = Literal["black", "white", "elsewhere"]
Statistic = Literal["median", "iqr", "error"]

SITES: tuple[str, ...] = ("black", "white", "elsewhere")
STATISTICS: tuple[str, ...] = ("median", "iqr", "error")

CELL_COLUMNS = ["swarm_size", "variant", "rho_informed", "rho_black"]


def _cell_label(n: int, rho_i: float, rho_b: float, variant: str) -> str:
    return f"N={n} rho_I={rho_i:g} rho_sb={rho_b:g} {variant}"


@dataclass(frozen=True)
class TrialRecord:
    """Final occupancy of one trial, with the cell and seed that produced it."""

    swarm_size: int
    rho_informed: float
    rho_black: float
    variant: str
    trial_index: int
    seed: int
    black: int
    white: int
    elsewhere: int

    @staticmethod
    def make_key(
        swarm_size: int,
        rho_informed: float,
        rho_black: float,
        variant: str,
        trial_index: int,
        seed: int,
    ) -> TrialKey:
        return (
            int(swarm_size), float(rho_informed), float(rho_black),
            str(variant), int(trial_index), int(seed),
        )

    @property
    def key(self) -> TrialKey:
        return self.make_key(
            self.swarm_size, self.rho_informed, self.rho_black,
            self.variant, self.trial_index, self.seed,
        )

    @property
    def cell(self) -> tuple[int, float, float, str]:
        return self.key[:4]

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in fields(cls)]


@dataclass(frozen=True)
class TrialFailure:
    """A trial that raised instead of producing a result."""

    swarm_size: int
    rho_informed: float
    rho_black: float
    variant: str
    trial_index: int
    seed: int
    error_type: str
    message: str

    @property
    def cell(self) -> tuple[int, float, float, str]:
        return (
            int(self.swarm_size), float(self.rho_informed),
            float(self.rho_black), str(self.variant),
        )

    @property
    def cell_label(self) -> str:
        return _cell_label(*self.cell)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class CellSummary:
    """
    Order statistics of one cell's successful trials.

    ``target_black`` and ``target_white`` are the counts an ideal
    aggregation would reach, ``N rho_sb`` and ``N (1 - rho_sb)``; the
    ``error_*`` fields are the absolute distance of the median from them.
    """

    swarm_size: int
    variant: str
    rho_informed: float
    rho_black: float
    n_trials: int
    n_failed: int
    median_black: float
    iqr_black: float
    median_white: float
    iqr_white: float
    median_elsewhere: float
    iqr_elsewhere: float
    target_black: float
    target_white: float
    error_black: float
    error_white: float

    @property
    def label(self) -> str:
        return _cell_label(
            self.swarm_size, self.rho_informed, self.rho_black, self.variant
        )


def _summarize_cell(
    cell: tuple[int, float, float, str],
    records: list[TrialRecord],
    n_failed: int,
) -> CellSummary:
    n, rho_i, rho_b, variant = cell
    nan = float("nan")

    if records:
        med_b, iqr_b = median_and_iqr([r.black for r in records])
        med_w, iqr_w = median_and_iqr([r.white for r in records])
        med_e, iqr_e = median_and_iqr([r.elsewhere for r in records])
    else:
        med_b = iqr_b = med_w = iqr_w = med_e = iqr_e = nan

    target_black = n * rho_b
    target_white = n * (1.0 - rho_b)

    return CellSummary(
        swarm_size=n,
        variant=variant,
        rho_informed=rho_i,
        rho_black=rho_b,
        n_trials=len(records),
        n_failed=n_failed,
        median_black=med_b,
        iqr_black=iqr_b,
        median_white=med_w,
        iqr_white=iqr_w,
        median_elsewhere=med_e,
        iqr_elsewhere=iqr_e,
        target_black=target_black,
        target_white=target_white,
        error_black=abs(med_b - target_black),
        error_white=abs(med_w - target_white),
    )


def _cell_sort_key(cell: tuple[int, float, float, str]):
    n, rho_i, rho_b, variant = cell
    return (n, variant, rho_i, rho_b)


def _record_sort_key(record: TrialRecord):
    return (*_cell_sort_key(record.cell), record.trial_index)


@dataclass(frozen=True)
class SummaryTable:
    """
    Per-cell summaries of a sweep, plus the raw records and failures.

    Rows, records and failures are held in a canonical order
    (swarm size, variant, informed proportion, black proportion, trial),
    independent of completion order.
    """

    rows: tuple[CellSummary, ...]
    records: tuple[TrialRecord, ...]
    failures: tuple[TrialFailure, ...] = ()

    def to_frame(self) -> pd.DataFrame:
        """One row per cell."""
        columns = [f.name for f in fields(CellSummary)]
        return pd.DataFrame(
            [asdict(row) for row in self.rows], columns=columns
        )

    def raw_frame(self) -> pd.DataFrame:
        """One row per successful trial."""
        return pd.DataFrame(
            [r.to_dict() for r in self.records],
            columns=TrialRecord.field_names(),
        )

    def cell(
        self, swarm_size: int, rho_informed: float, rho_black: float,
        variant: str,
    ) -> CellSummary:
        for row in self.rows:
            if (
                row.swarm_size == swarm_size
                and row.variant == str(variant)
                and row.rho_informed == rho_informed
                and row.rho_black == rho_black
            ):
                return row
        raise KeyError(
            _cell_label(swarm_size, rho_informed, rho_black, str(variant))
        )

    def groups(self) -> list[tuple[int, str]]:
        """Distinct ``(swarm_size, variant)`` pairs, in row order."""
        seen: dict[tuple[int, str], None] = {}
        for row in self.rows:
            seen.setdefault((row.swarm_size, row.variant), None)
        return list(seen)

    def heatmap(
        self,
        swarm_size: int,
        variant: str,
        site: Site,
        statistic: Statistic = "median",
    ) -> pd.DataFrame:
        """
        Matrix of one statistic for one swarm size and variant.

        Rows are informed proportions, columns black proportions.
        ``error`` is only defined for the black and white sites.
        """
        if site not in SITES:
            raise ValueError(f"unknown site {site!r}")
        if statistic not in STATISTICS:
            raise ValueError(f"unknown statistic {statistic!r}")
        if statistic == "error" and site == "elsewhere":
            raise ValueError("error is defined for the black and white sites only")

        frame = self.to_frame()
        frame = frame[
            (frame["swarm_size"] == swarm_size)
            & (frame["variant"] == str(variant))
        ]
        if frame.empty:
            raise KeyError(f"no cells for N={swarm_size} {variant}")

        return frame.pivot(
            index="rho_informed",
            columns="rho_black",
            values=f"{statistic}_{site}",
        ).sort_index().sort_index(axis=1)


def summarize_records(
    records: Iterable[TrialRecord],
    failures: Iterable[TrialFailure] = (),
) -> SummaryTable:
    """
    Group records by cell and compute order statistics per cell.

    Each cell's summary depends on that cell's records only. Cells with
    failures but no successful trial are kept with ``nan`` statistics.
    """
    records = sorted(records, key=_record_sort_key)
    failures = sorted(
        failures, key=lambda f: (*_cell_sort_key(f.cell), f.trial_index)
    )

    by_cell: dict[tuple, list[TrialRecord]] = {}
    for record in records:
        by_cell.setdefault(record.cell, []).append(record)

    failed: dict[tuple, int] = {}
    for failure in failures:
        failed[failure.cell] = failed.get(failure.cell, 0) + 1

    cells = sorted(set(by_cell) | set(failed), key=_cell_sort_key)
    rows = tuple(
        _summarize_cell(cell, by_cell.get(cell, []), failed.get(cell, 0))
        for cell in cells
    )
    return SummaryTable(
        rows=rows, records=tuple(records), failures=tuple(failures)
    )
