import json

import numpy as np
import pytest

from swarmkit.harness import (
    HISTOGRAM_COLUMNS,
    SharedSettings,
    derive_seed,
    site_histogram,
    symmetry_breaking_experiment,
    write_symmetry_outputs,
)
from swarmkit.harness.sweep import CellKey
from swarmkit.controller import Variant
from swarmkit.errors import ExperimentError, SwarmkitError


def test__site_histogram__single_run():
    histogram = site_histogram(np.array([7]), np.array([2]), swarm_size=10)

    assert list(histogram.columns) == HISTOGRAM_COLUMNS
    assert list(histogram["robots_on_site"]) == list(range(11))
    assert (histogram["frequency_black"] > 0).sum() == 1
    assert (histogram["frequency_white"] > 0).sum() == 1
    assert histogram.loc[7, "frequency_black"] == 1.0
    assert histogram.loc[2, "frequency_white"] == 1.0
    assert histogram.loc[7, "frequency"] == 0.5


def test__site_histogram__frequencies_sum_to_one():
    rng = np.random.default_rng(4)
    black = rng.integers(0, 51, size=30)
    white = 50 - black

    histogram = site_histogram(black, white, swarm_size=50, bin_width=5)

    for column in ("frequency_black", "frequency_white", "frequency"):
        assert histogram[column].sum() == pytest.approx(1.0)
    assert histogram["robots_on_site"].iloc[-1] == 50


def test__site_histogram__whole_swarm_lands_in_last_bin():
    histogram = site_histogram(np.array([10]), np.array([0]), 10, bin_width=3)

    assert list(histogram["robots_on_site"]) == [0, 3, 6, 9]
    assert histogram["frequency_black"].iloc[-1] == 1.0


def test__site_histogram__bin_width():
    with pytest.raises(ValueError):
        site_histogram(np.array([1]), np.array([1]), 10, bin_width=0)


@pytest.mark.integration
def test__experiment(tmp_path):
    report = symmetry_breaking_experiment(
        swarm_size=50, runs=3, base_seed=2,
        shared=SharedSettings(duration=2.0), aggregate_threshold=35,
    )

    assert report.runs == 3
    assert len(report.records) == 3
    assert sum(report.winner_counts.values()) == 3
    assert 0.0 <= report.aggregate_fraction <= 1.0
    assert all(r.rho_informed == 0.0 and r.variant == "simplified"
               for r in report.records)
    assert report.records[0].seed == derive_seed(
        2, CellKey(50, 0.0, 0.5, Variant.SIMPLIFIED), 0
    )

    written = write_symmetry_outputs(report, tmp_path)

    assert {p.name for p in written} == {
        "histogram.csv", "symmetry.json", "raw.csv", "failures.json",
    }
    payload = json.loads((tmp_path / "symmetry.json").read_text())
    assert payload["runs"] == 3
    assert payload["n_failed"] == 0


@pytest.mark.integration
def test__experiment__all_failed():
    crowded = SharedSettings(
        duration=2.0, arena_diameter=1.0, site_diameter=0.4,
        max_placement_attempts=5,
    )

    with pytest.raises(ExperimentError, match="all 2 symmetry-breaking runs failed") as info:
        symmetry_breaking_experiment(swarm_size=50, runs=2, shared=crowded)

    assert isinstance(info.value, SwarmkitError)
    assert len(info.value.failures) == 2
    assert {f.error_type for f in info.value.failures} == {"PlacementError"}
