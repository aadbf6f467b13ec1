# src/swarmkit/harness/symmetry.py

"""
Symmetry breaking with no informed robots.

With two identical sites and no informed robots, the simplified
controller should repeatedly gather most of the swarm on one site,
chosen at random from run to run.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any
import logging

import numpy as np
import pandas as pd

from swarmkit.controller.types import Variant
from swarmkit.errors import ExperimentError

from .statistics import median_and_iqr
from .summary import TrialFailure, TrialRecord
from .sweep import SharedSettings, SweepSpec, run_sweep


logger = logging.getLogger(__name__)

HISTOGRAM_COLUMNS = [
    "robots_on_site", "frequency_black", "frequency_white", "frequency",
]


def site_histogram(
    black: np.ndarray,
    white: np.ndarray,
    swarm_size: int,
    bin_width: int = 1,
) -> pd.DataFrame:
    """
    Relative frequency of final per-site counts across runs.

    Bins are ``[lo, lo + bin_width)`` for ``lo = 0, bin_width, ...`` up to
    and including ``swarm_size``; ``robots_on_site`` is the lower edge.
    ``frequency`` pools both sites, so each frequency column sums to 1.
    """
    if bin_width < 1:
        raise ValueError("bin_width must be >= 1.")

    edges = np.arange(0, swarm_size + bin_width + 1, bin_width)
    runs = len(black)

    count_black, _ = np.histogram(black, bins=edges)
    count_white, _ = np.histogram(white, bins=edges)

    return pd.DataFrame({
        "robots_on_site": edges[:-1],
        "frequency_black": count_black / runs,
        "frequency_white": count_white / runs,
        "frequency": (count_black + count_white) / (2 * runs),
    }, columns=HISTOGRAM_COLUMNS)


def _winner(record: TrialRecord) -> str:
    if record.black > record.white:
        return "black"
    if record.white > record.black:
        return "white"
    return "tie"


@dataclass(frozen=True)
class SymmetryReport:
    """
    Outcome of a symmetry-breaking experiment.

    Attributes
    ----------
    histogram:
        Per-site frequency table, see ``site_histogram``.
    offsite_median, offsite_iqr:
        Order statistics of the robots on neither site.
    winners:
        Site holding more robots in each run: ``black``, ``white`` or
        ``tie``.
    aggregate_fraction:
        Fraction of runs with at least ``aggregate_threshold`` robots on
        a single site.
    """

    swarm_size: int
    runs: int
    base_seed: int
    records: tuple[TrialRecord, ...]
    histogram: pd.DataFrame = field(compare=False)
    offsite_median: float
    offsite_iqr: float
    winners: tuple[str, ...]
    aggregate_threshold: int
    aggregate_fraction: float
    failures: tuple[TrialFailure, ...] = ()

    @property
    def winner_counts(self) -> dict[str, int]:
        counts = Counter(self.winners)
        return {site: counts.get(site, 0) for site in ("black", "white", "tie")}

    def to_dict(self) -> dict[str, Any]:
        return {
            "swarm_size": self.swarm_size,
            "runs": self.runs,
            "base_seed": self.base_seed,
            "offsite_median": self.offsite_median,
            "offsite_iqr": self.offsite_iqr,
            "winners": list(self.winners),
            "winner_counts": self.winner_counts,
            "aggregate_threshold": self.aggregate_threshold,
            "aggregate_fraction": self.aggregate_fraction,
            "n_failed": len(self.failures),
        }


def symmetry_breaking_experiment(
    swarm_size: int = 100,
    runs: int = 50,
    base_seed: int = 0,
    shared: SharedSettings | None = None,
    *,
    bin_width: int = 1,
    aggregate_threshold: int = 70,
    workers: int = 1,
) -> SymmetryReport:
    """
    Run the simplified controller ``runs`` times with no informed robots.

    Trials are seeded exactly as the sweep cell
    ``(swarm_size, 0.0, 0.5, simplified)`` would be.

    Raises
    ------
    ExperimentError
        If every run failed; the failures ride on the exception.
    """
    spec = SweepSpec(
        swarm_sizes=(swarm_size,),
        rho_informed_values=(0.0,),
        rho_black_values=(0.5,),
        variants=(Variant.SIMPLIFIED,),
        trials_per_cell=runs,
        base_seed=base_seed,
    )
    table = run_sweep(spec, shared, workers=workers)
    records = table.records
    if not records:
        logger.error("all %d symmetry-breaking runs failed", runs)
        raise ExperimentError(
            f"all {runs} symmetry-breaking runs failed", table.failures
        )

    black = np.array([r.black for r in records])
    white = np.array([r.white for r in records])
    offsite_median, offsite_iqr = median_and_iqr([r.elsewhere for r in records])

    aggregated = np.maximum(black, white) >= aggregate_threshold
    winners = tuple(_winner(r) for r in records)

    report = SymmetryReport(
        swarm_size=swarm_size,
        runs=runs,
        base_seed=base_seed,
        records=records,
        histogram=site_histogram(black, white, swarm_size, bin_width),
        offsite_median=offsite_median,
        offsite_iqr=offsite_iqr,
        winners=winners,
        aggregate_threshold=aggregate_threshold,
        aggregate_fraction=float(np.mean(aggregated)),
        failures=table.failures,
    )

    logger.info(
        "symmetry breaking: N=%d runs=%d winners=%s aggregated=%.2f "
        "offsite median=%g iqr=%g",
        swarm_size, runs, report.winner_counts, report.aggregate_fraction,
        offsite_median, offsite_iqr,
    )
    return report
