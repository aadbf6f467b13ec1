import importlib
import json
import logging

import pandas as pd
import pytest
import yaml

from swarmkit.cli import main
from swarmkit.log import LOGGER_NAME

FAST = ["--duration", "2"]
ONE_CELL = [
    "--swarm-sizes", "50", "--rho-informed-values", "0.3",
    "--rho-black-values", "0.7", "--variants", "simplified",
    "--trials-per-cell", "3", "--base-seed", "5",
]


@pytest.fixture(autouse=True)
def restore_logger():
    logger = logging.getLogger(LOGGER_NAME)
    saved = (list(logger.handlers), logger.level, logger.propagate)
    yield
    logger.handlers[:] = saved[0]
    logger.setLevel(saved[1])
    logger.propagate = saved[2]


@pytest.mark.integration
def test__run__deterministic_result(tmp_path, capsys):
    args = ["run", "--seed", "12", *FAST, "-q"]

    assert main([*args, "-o", str(tmp_path / "a")]) == 0
    assert main([*args, "-o", str(tmp_path / "b")]) == 0

    first = (tmp_path / "a" / "result.json").read_bytes()
    assert first == (tmp_path / "b" / "result.json").read_bytes()

    payload = json.loads(first)
    assert payload["seed"] == 12
    assert payload["variant"] == "simplified"
    assert (
        payload["robots_on_black"] + payload["robots_on_white"]
        + payload["robots_elsewhere"]
    ) == 50
    assert "black=" in capsys.readouterr().out
    assert (tmp_path / "a" / "config.yaml").exists()


@pytest.mark.integration
def test__run__trajectory(tmp_path):
    code = main([
        "run", *FAST, "-q", "--trajectory", "--trajectory-interval", "1",
        "-o", str(tmp_path),
    ])

    assert code == 0
    frame = pd.read_csv(tmp_path / "trajectory.csv")
    assert len(frame) == 3 * 50


def test__run__bad_rho(tmp_path, capsys):
    code = main(["run", "--rho-informed", "1.2", "-o", str(tmp_path)])

    assert code == 1
    assert "rho_informed out of [0,1]" in capsys.readouterr().err
    assert not (tmp_path / "result.json").exists()


def test__run__unknown_config_key(tmp_path, capsys):
    config = tmp_path / "c.yaml"
    config.write_text("swarm_sise: 50\n")

    assert main(["run", "-c", str(config), "-o", str(tmp_path)]) == 1
    assert "unknown configuration key" in capsys.readouterr().err


def test__run__missing_config_file(tmp_path):
    assert main(["run", "-c", str(tmp_path / "nope.yaml")]) == 1


@pytest.mark.integration
def test__sweep_then_stats(tmp_path):
    out = tmp_path / "sweep"

    assert main(["sweep", *ONE_CELL, *FAST, "-q", "-o", str(out)]) == 0

    raw = pd.read_csv(out / "raw.csv")
    assert len(raw) == 3
    assert len((out / "raw.jsonl").read_text().splitlines()) == 3
    assert (out / "heatmap_median_black_simplified_N50.csv").exists()
    assert json.loads((out / "failures.json").read_text()) == []

    stats_out = tmp_path / "stats"
    assert main(["stats", str(out / "raw.jsonl"), "-o", str(stats_out), "-q"]) == 0

    assert (stats_out / "summary.csv").read_text() == (
        (out / "summary.csv").read_text()
    )
    assert (stats_out / "heatmap_iqr_white_simplified_N50.csv").read_text() == (
        (out / "heatmap_iqr_white_simplified_N50.csv").read_text()
    )
    heatmap = pd.read_csv(stats_out / "heatmap_median_black_simplified_N50.csv")
    assert len(heatmap) == 1


@pytest.mark.integration
def test__sweep__resume(tmp_path):
    out = tmp_path / "sweep"
    assert main(["sweep", *ONE_CELL, *FAST, "-q", "-o", str(out)]) == 0
    summary = (out / "summary.csv").read_text()

    lines = (out / "raw.jsonl").read_text().splitlines()
    (out / "raw.jsonl").write_text("\n".join(lines[:1]) + "\n")

    assert main(["sweep", *ONE_CELL, *FAST, "-q", "-o", str(out)]) == 0
    assert (out / "summary.csv").read_text() == summary
    assert len((out / "raw.jsonl").read_text().splitlines()) == 3


def test__sweep__bad_grid(tmp_path, capsys):
    code = main([
        "sweep", "--swarm-sizes", "60", "--trials-per-cell", "1",
        "-o", str(tmp_path),
    ])

    assert code == 1
    assert "arena_diameter" in capsys.readouterr().err


def test__stats__malformed_raw(tmp_path, capsys):
    raw = tmp_path / "raw.jsonl"
    raw.write_text("{}\n")

    assert main(["stats", str(raw)]) == 1
    assert "line 1" in capsys.readouterr().err


def test__config__stdout(capsys):
    assert main(["config"]) == 0

    settings = yaml.safe_load(capsys.readouterr().out)
    assert settings["swarm_size"] == 50
    assert settings["variants"] == ["simplified", "baseline"]


def test__config__file_override(tmp_path):
    source = tmp_path / "in.yaml"
    source.write_text("swarm_size: 100\n")
    target = tmp_path / "sub" / "out.yaml"

    assert main(["config", "-c", str(source), "-o", str(target)]) == 0
    assert yaml.safe_load(target.read_text())["swarm_size"] == 100


@pytest.mark.integration
def test__symmetry(tmp_path, capsys):
    code = main([
        "symmetry", "-N", "50", "--runs", "2", "--aggregate-threshold", "35",
        *FAST, "-q", "-o", str(tmp_path),
    ])

    assert code == 0
    assert "aggregated=" in capsys.readouterr().out
    histogram = pd.read_csv(tmp_path / "histogram.csv")
    assert len(histogram) == 51
    assert json.loads((tmp_path / "symmetry.json").read_text())["runs"] == 2


@pytest.mark.integration
def test__sweep__keeps_records_of_an_earlier_grid(tmp_path, capsys):
    out = tmp_path / "sweep"
    other_cell = [
        "1.0" if flag == "0.7" else flag for flag in ONE_CELL
    ]

    assert main(["sweep", *ONE_CELL, *FAST, "-q", "-o", str(out)]) == 0
    assert main(["sweep", *other_cell, *FAST, "-o", str(out)]) == 0

    raw = [json.loads(line) for line in (out / "raw.jsonl").read_text().splitlines()]
    assert sorted(r["rho_black"] for r in raw) == [0.7] * 3 + [1.0] * 3
    assert len(pd.read_csv(out / "summary.csv")) == 1
    assert "keeping 3 raw record(s)" in capsys.readouterr().err


@pytest.mark.integration
def test__symmetry__every_run_failed(tmp_path, capsys):
    crowded = tmp_path / "crowded.yaml"
    crowded.write_text(
        "arena_diameter: 1.0\nsite_diameter: 0.4\nmax_placement_attempts: 5\n"
    )
    out = tmp_path / "out"

    code = main([
        "symmetry", "-N", "50", "--runs", "2", "-c", str(crowded),
        *FAST, "-o", str(out),
    ])

    assert code == 2
    assert "all 2 symmetry-breaking runs failed" in capsys.readouterr().err
    assert len(json.loads((out / "failures.json").read_text())) == 2


@pytest.mark.integration
def test__sweep__summary_regenerated_without_simulation(tmp_path, monkeypatch):
    import swarmkit.harness.sweep as sweep

    out = tmp_path / "sweep"
    assert main(["sweep", *ONE_CELL, *FAST, "-q", "-o", str(out)]) == 0
    summary = (out / "summary.csv").read_text()
    (out / "summary.csv").unlink()

    def no_trials(config):
        raise AssertionError("trial re-simulated")

    monkeypatch.setattr(sweep, "run_trial", no_trials)

    assert main(["sweep", *ONE_CELL, *FAST, "-q", "-o", str(out)]) == 0
    assert (out / "summary.csv").read_text() == summary


def test__sweep__table1_definition_logged(tmp_path, monkeypatch, capsys):
    from swarmkit.harness import summarize_records

    cli_main = importlib.import_module("swarmkit.cli.main")

    seen = {}

    def fake_sweep(spec, shared, **kwargs):
        seen["cells"] = spec.n_cells
        return summarize_records([])

    monkeypatch.setattr(cli_main, "run_sweep", fake_sweep)

    assert main(["sweep", "--table1", "-o", str(tmp_path)]) == 0
    assert seen["cells"] == 120
    assert "120 cells x 20 trials = 2400 trials" in capsys.readouterr().err
