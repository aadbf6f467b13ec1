# src/swarmkit/cli/main.py

"""
Command-line entry point.

Commands
--------
run        one trial; writes ``result.json`` and optional time series and
           trajectory CSVs
sweep      a parameter grid; resumable from ``raw.jsonl``
stats      summaries and heatmaps recomputed from raw records
symmetry   the no-informed-robot symmetry-breaking experiment
config     print or write the effective configuration

Exit status is 0 on success, 1 on a configuration or input error and 2
when a sweep finished with failed trials.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Sequence
import argparse
import json
import logging
import sys

import yaml

from swarmkit.engine.simulation import run_trial
from swarmkit.engine.trajectory import TrajectoryRecorder
from swarmkit.errors import ExperimentError, SwarmkitError
from swarmkit.harness.io import (
    FAILURES_JSON,
    RAW_JSONL,
    SUMMARY_CSV,
    append_raw_jsonl,
    read_failures,
    read_raw_records,
    write_failures,
    write_heatmaps,
    write_summary,
    write_sweep_outputs,
    write_symmetry_outputs,
)
from swarmkit.harness.summary import TrialFailure, TrialRecord, summarize_records
from swarmkit.harness.sweep import run_sweep, sweep_definition
from swarmkit.harness.symmetry import symmetry_breaking_experiment
from swarmkit.log import configure_logging

from .config import (
    build_sweep,
    build_trial_config,
    dump_settings,
    load_config_file,
    merge_settings,
    table1_overrides,
    write_settings,
)


logger = logging.getLogger("swarmkit.cli")

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_PARTIAL = 2

CONFIG_FILENAME = "config.yaml"


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-c", "--config", type=Path, default=None,
        help="flat YAML configuration file",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="more logging (repeatable)",
    )
    parser.add_argument(
        "-q", "--quiet", action="count", default=0,
        help="less logging",
    )
    parser.add_argument("--duration", type=float, default=None)
    parser.add_argument("--tick-dt", dest="tick_dt", type=float, default=None)


def _add_trial_overrides(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument(
        "--variant", choices=["baseline", "simplified"], default=None
    )
    parser.add_argument("-N", "--swarm-size", dest="swarm_size", type=int, default=None)
    parser.add_argument("--rho-informed", dest="rho_informed", type=float, default=None)
    parser.add_argument("--rho-black", dest="rho_black", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swarmkit",
        description="Aggregation of robot swarms steered by informed robots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one trial")
    _add_common(p_run)
    _add_trial_overrides(p_run)
    p_run.add_argument("-o", "--out", type=Path, default=Path("out/run"))
    p_run.add_argument(
        "--trajectory", action="store_true",
        help="also write trajectory.csv",
    )
    p_run.add_argument(
        "--trajectory-interval", dest="trajectory_interval",
        type=float, default=None,
    )
    p_run.set_defaults(handler=cmd_run)

    p_sweep = sub.add_parser("sweep", help="run a parameter grid")
    _add_common(p_sweep)
    p_sweep.add_argument("-o", "--out", type=Path, default=Path("out/sweep"))
    p_sweep.add_argument(
        "--table1", action="store_true",
        help="full standard grid, both variants",
    )
    p_sweep.add_argument(
        "--swarm-sizes", dest="swarm_sizes", type=int, nargs="+", default=None
    )
    p_sweep.add_argument(
        "--rho-informed-values", dest="rho_informed_values",
        type=float, nargs="+", default=None,
    )
    p_sweep.add_argument(
        "--rho-black-values", dest="rho_black_values",
        type=float, nargs="+", default=None,
    )
    p_sweep.add_argument(
        "--variants", choices=["baseline", "simplified"], nargs="+",
        default=None,
    )
    p_sweep.add_argument(
        "--trials-per-cell", dest="trials_per_cell", type=int, default=None
    )
    p_sweep.add_argument("--base-seed", dest="base_seed", type=int, default=None)
    p_sweep.add_argument("-j", "--workers", type=int, default=None)
    p_sweep.set_defaults(handler=cmd_sweep)

    p_stats = sub.add_parser("stats", help="summarize raw sweep records")
    p_stats.add_argument("raw", type=Path, help="raw.jsonl or raw.csv")
    p_stats.add_argument("-o", "--out", type=Path, default=None)
    p_stats.add_argument("-v", "--verbose", action="count", default=0)
    p_stats.add_argument("-q", "--quiet", action="count", default=0)
    p_stats.set_defaults(handler=cmd_stats)

    p_sym = sub.add_parser("symmetry", help="symmetry breaking without informed robots")
    _add_common(p_sym)
    p_sym.add_argument("-o", "--out", type=Path, default=Path("out/symmetry"))
    p_sym.add_argument("-N", "--swarm-size", dest="swarm_size", type=int, default=100)
    p_sym.add_argument("--runs", type=int, default=50)
    p_sym.add_argument("--base-seed", dest="base_seed", type=int, default=None)
    p_sym.add_argument("--bin-width", dest="bin_width", type=int, default=1)
    p_sym.add_argument(
        "--aggregate-threshold", dest="aggregate_threshold", type=int, default=70
    )
    p_sym.add_argument("-j", "--workers", type=int, default=None)
    p_sym.set_defaults(handler=cmd_symmetry)

    p_cfg = sub.add_parser("config", help="print the effective configuration")
    p_cfg.add_argument("-c", "--config", type=Path, default=None)
    p_cfg.add_argument("-o", "--out", type=Path, default=None)
    p_cfg.add_argument("-v", "--verbose", action="count", default=0)
    p_cfg.add_argument("-q", "--quiet", action="count", default=0)
    p_cfg.set_defaults(handler=cmd_config)

    return parser


def _settings(args: argparse.Namespace, *keys: str, extra=None) -> dict[str, Any]:
    """Defaults < config file < ``extra`` < flags named by ``keys``."""
    file_layer = load_config_file(args.config) if args.config else None
    flags = {key: getattr(args, key, None) for key in keys}
    return merge_settings(file_layer, extra, flags)


def _dump_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_run(args: argparse.Namespace) -> int:
    settings = _settings(
        args,
        "seed", "variant", "swarm_size", "rho_informed", "rho_black",
        "duration", "tick_dt", "trajectory_interval",
    )
    config = build_trial_config(settings)

    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    write_settings(settings, out / CONFIG_FILENAME)

    recorder = None
    if args.trajectory:
        recorder = TrajectoryRecorder(settings["trajectory_interval"])

    result = run_trial(config, recorder=recorder)

    payload = {
        "swarm_size": config.swarm_size,
        "rho_informed": config.rho_informed,
        "rho_black": config.rho_black,
        "variant": config.variant.value,
        "seed": config.seed,
        **result.to_dict(),
    }
    (out / "result.json").write_text(_dump_json(payload), encoding="utf-8")

    if result.occupancy_timeseries is not None:
        result.timeseries_frame().to_csv(out / "timeseries.csv", index=False)
    if recorder is not None:
        recorder.write_csv(out / "trajectory.csv")

    print(
        f"black={result.robots_on_black} white={result.robots_on_white} "
        f"elsewhere={result.robots_elsewhere}"
    )
    return EXIT_OK


def _existing_records(out: Path) -> list[TrialRecord]:
    raw = out / RAW_JSONL
    if not raw.exists() or raw.stat().st_size == 0:
        return []
    records = read_raw_records(raw)
    logger.info("found %d completed trials in %s", len(records), raw)
    return records


def cmd_sweep(args: argparse.Namespace) -> int:
    extra = table1_overrides() if args.table1 else None
    settings = _settings(
        args,
        "swarm_sizes", "rho_informed_values", "rho_black_values", "variants",
        "trials_per_cell", "base_seed", "workers", "duration", "tick_dt",
        extra=extra,
    )
    spec, shared = build_sweep(settings)

    definition = sweep_definition(spec)
    logger.info(
        "sweep definition: %d cells x %d trials = %d trials",
        definition["n_cells"], spec.trials_per_cell, definition["n_trials"],
    )
    for cell in spec.cells():
        logger.info("  cell %s", cell.label)

    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    write_settings(settings, out / CONFIG_FILENAME)

    completed = _existing_records(out)
    raw_path = out / RAW_JSONL

    def persist(outcome: TrialRecord | TrialFailure) -> None:
        if isinstance(outcome, TrialRecord):
            append_raw_jsonl(outcome, raw_path)

    table = run_sweep(
        spec,
        shared,
        workers=int(settings["workers"]),
        completed=completed,
        on_result=persist,
    )
    write_sweep_outputs(table, out, previous=completed)

    n_failed = len(table.failures)
    print(
        f"{len(table.rows)} cells, {len(table.records)} trials, "
        f"{n_failed} failed -> {out}"
    )
    if n_failed:
        logger.warning("%d trial(s) failed; see %s", n_failed, out / FAILURES_JSON)
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    raw: Path = args.raw
    out: Path = args.out or raw.parent
    out.mkdir(parents=True, exist_ok=True)

    records = read_raw_records(raw)
    failures = read_failures(raw.parent / FAILURES_JSON)
    table = summarize_records(records, failures)

    write_summary(table, out / SUMMARY_CSV)
    write_heatmaps(table, out)

    print(f"{len(table.rows)} cells from {len(records)} trials -> {out}")
    return EXIT_OK


def cmd_symmetry(args: argparse.Namespace) -> int:
    settings = _settings(
        args, "base_seed", "workers", "duration", "tick_dt",
        extra={"swarm_size": args.swarm_size},
    )
    # validates body, controller and timing before the runs start
    _, shared = build_sweep({
        **settings,
        "swarm_sizes": [args.swarm_size],
        "rho_informed_values": [0.0],
        "rho_black_values": [0.5],
        "variants": ["simplified"],
        "trials_per_cell": args.runs,
    })

    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    write_settings(settings, out / CONFIG_FILENAME)

    try:
        report = symmetry_breaking_experiment(
            args.swarm_size,
            args.runs,
            settings["base_seed"],
            shared,
            bin_width=args.bin_width,
            aggregate_threshold=args.aggregate_threshold,
            workers=int(settings["workers"]),
        )
    except ExperimentError as err:
        write_failures(err.failures, out / FAILURES_JSON)
        logger.error("%s", err)
        return EXIT_PARTIAL
    write_symmetry_outputs(report, out)

    counts = report.winner_counts
    print(
        f"black={counts['black']} white={counts['white']} tie={counts['tie']} "
        f"aggregated={report.aggregate_fraction:.2f} "
        f"offsite median={report.offsite_median:g} iqr={report.offsite_iqr:g}"
    )
    return EXIT_PARTIAL if report.failures else EXIT_OK


def cmd_config(args: argparse.Namespace) -> int:
    settings = _settings(args)
    text = dump_settings(settings)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        write_settings(settings, args.out)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose - args.quiet)

    try:
        return args.handler(args)
    except (SwarmkitError, OSError, yaml.YAMLError) as exc:
        print(f"swarmkit: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
