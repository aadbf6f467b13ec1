import math

import numpy as np
import pytest

from swarmkit.harness import (
    SummaryTable,
    TrialFailure,
    TrialRecord,
    summarize_records,
)


def rec(n, rho_i, rho_b, variant, trial, black, white):
    return TrialRecord(
        swarm_size=n, rho_informed=rho_i, rho_black=rho_b, variant=variant,
        trial_index=trial, seed=1000 + trial, black=black, white=white,
        elsewhere=n - black - white,
    )


@pytest.fixture
def grid_records():
    records = []
    for rho_i in (0.1, 0.2):
        for rho_b in (0.5, 1.0):
            for trial, black in enumerate((20, 30, 40)):
                records.append(rec(50, rho_i, rho_b, "simplified", trial, black, 5))
    return records


def test__one_row_per_cell(grid_records):
    table = summarize_records(grid_records)

    assert len(table.rows) == 4
    assert len(table.records) == 12
    assert all(row.n_trials == 3 for row in table.rows)


def test__statistics_and_targets(grid_records):
    row = summarize_records(grid_records).cell(50, 0.2, 1.0, "simplified")

    assert row.median_black == 30.0
    assert row.iqr_black == 10.0
    assert row.median_white == 5.0
    assert row.median_elsewhere == 15.0
    assert row.target_black == 50.0
    assert row.target_white == 0.0
    assert row.error_black == 20.0
    assert row.error_white == 5.0


def test__order_independent(grid_records):
    forward = summarize_records(grid_records)
    backward = summarize_records(reversed(grid_records))

    assert forward == backward


def test__cell_summary_ignores_other_cells(grid_records):
    alone = [r for r in grid_records if r.cell == (50, 0.1, 0.5, "simplified")]

    assert (
        summarize_records(alone).rows[0]
        == summarize_records(grid_records).cell(50, 0.1, 0.5, "simplified")
    )


def test__missing_cell(grid_records):
    with pytest.raises(KeyError):
        summarize_records(grid_records).cell(100, 0.1, 0.5, "simplified")


def test__heatmap(grid_records):
    records = [
        r if r.rho_informed == 0.1
        else rec(50, r.rho_informed, r.rho_black, r.variant, r.trial_index,
                 r.black + 1, r.white)
        for r in grid_records
    ]
    matrix = summarize_records(records).heatmap(50, "simplified", "black")

    assert list(matrix.index) == [0.1, 0.2]
    assert list(matrix.columns) == [0.5, 1.0]
    np.testing.assert_array_equal(matrix.to_numpy(), [[30, 30], [31, 31]])


def test__heatmap__error(grid_records):
    matrix = summarize_records(grid_records).heatmap(
        50, "simplified", "black", "error"
    )

    np.testing.assert_array_equal(matrix.to_numpy(), [[5, 20], [5, 20]])


@pytest.mark.parametrize(
    "site, statistic",
    [("grey", "median"), ("black", "mean"), ("elsewhere", "error")],
)
def test__heatmap__invalid(grid_records, site, statistic):
    with pytest.raises(ValueError):
        summarize_records(grid_records).heatmap(50, "simplified", site, statistic)


def test__heatmap__unknown_group(grid_records):
    with pytest.raises(KeyError):
        summarize_records(grid_records).heatmap(50, "baseline", "black")


def test__groups_and_canonical_order():
    records = [
        rec(100, 0.1, 0.5, "baseline", 0, 50, 10),
        rec(50, 0.1, 0.5, "simplified", 0, 20, 5),
        rec(50, 0.1, 0.5, "baseline", 0, 20, 5),
    ]
    table = summarize_records(records)

    assert table.groups() == [(50, "baseline"), (50, "simplified"), (100, "baseline")]


def test__failures_counted_per_cell():
    records = [rec(50, 0.1, 0.5, "simplified", 0, 20, 5)]
    failures = [
        TrialFailure(50, 0.1, 0.5, "simplified", 1, 7, "PlacementError", "full"),
        TrialFailure(50, 0.1, 1.0, "simplified", 0, 8, "PlacementError", "full"),
    ]
    table = summarize_records(records, failures)

    assert table.cell(50, 0.1, 0.5, "simplified").n_failed == 1
    empty = table.cell(50, 0.1, 1.0, "simplified")
    assert empty.n_trials == 0
    assert empty.n_failed == 1
    assert math.isnan(empty.median_black)
    assert math.isnan(empty.error_black)


def test__frames(grid_records):
    table = summarize_records(grid_records)

    summary = table.to_frame()
    assert len(summary) == 4
    assert list(summary.columns[:4]) == [
        "swarm_size", "variant", "rho_informed", "rho_black",
    ]

    raw = table.raw_frame()
    assert list(raw.columns) == TrialRecord.field_names()
    assert len(raw) == 12


def test__empty_table_frames():
    table = SummaryTable(rows=(), records=())

    assert table.to_frame().empty
    assert table.raw_frame().empty
    assert table.groups() == []
