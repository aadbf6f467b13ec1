# src/swarmkit/harness/io.py

"""
Result files of sweeps and symmetry-breaking runs.

Raw per-trial records are written both as CSV and as JSON lines. The JSON
lines file is appended to as trials complete, so an interrupted sweep can
be resumed from it.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Iterable, Mapping
import json
import logging
import re

import pandas as pd

from swarmkit.controller.types import Variant
from swarmkit.errors import RecordError

from .summary import SITES, STATISTICS, SummaryTable, TrialFailure, TrialRecord
from .symmetry import SymmetryReport


logger = logging.getLogger(__name__)

RAW_CSV = "raw.csv"
RAW_JSONL = "raw.jsonl"
SUMMARY_CSV = "summary.csv"
FAILURES_JSON = "failures.json"
HISTOGRAM_CSV = "histogram.csv"

_INT_FIELDS = (
    "swarm_size", "trial_index", "seed", "black", "white", "elsewhere",
)
_FLOAT_FIELDS = ("rho_informed", "rho_black")


def heatmap_filename(statistic: str, site: str, variant: str, n: int) -> str:
    return f"heatmap_{statistic}_{site}_{variant}_N{n}.csv"


def _dump_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# raw records
# ---------------------------------------------------------------------------

def _as_int(raw: Any) -> int | None:
    if isinstance(raw, bool):
        return None
    if isinstance(raw, int):
        return raw
    if isinstance(raw, float):
        return int(raw) if raw.is_integer() else None
    if isinstance(raw, str):
        try:
            return int(raw.strip())
        except ValueError:
            return None
    return None


def parse_record(row: Mapping[str, Any], line: int) -> TrialRecord:
    """
    Validate one raw record.

    Raises
    ------
    RecordError
        On a missing field, a value of the wrong type, an unknown variant
        or counts that do not add up to the swarm size.
    """
    missing = [name for name in TrialRecord.field_names() if name not in row]
    if missing:
        raise RecordError(line, f"missing field(s) {', '.join(missing)}")

    values: dict[str, Any] = {}
    for name in _INT_FIELDS:
        raw = row[name]
        value = _as_int(raw)
        if value is None:
            raise RecordError(line, f"{name} is not an integer: {raw!r}")
        values[name] = value

    for name in _FLOAT_FIELDS:
        raw = row[name]
        try:
            if isinstance(raw, bool):
                raise ValueError
            values[name] = float(raw)
        except (TypeError, ValueError):
            raise RecordError(line, f"{name} is not a number: {raw!r}") from None

    try:
        values["variant"] = Variant(row["variant"]).value
    except ValueError:
        raise RecordError(line, f"unknown variant {row['variant']!r}") from None

    total = values["black"] + values["white"] + values["elsewhere"]
    if total != values["swarm_size"]:
        raise RecordError(
            line,
            f"black + white + elsewhere = {total}, "
            f"expected swarm_size {values['swarm_size']}",
        )

    return TrialRecord(**values)


def _read_jsonl(path: Path) -> list[TrialRecord]:
    records = []
    with path.open("r", encoding="utf-8") as handle:
        for line_no, text in enumerate(handle, start=1):
            if not text.strip():
                continue
            try:
                row = json.loads(text)
            except json.JSONDecodeError as exc:
                raise RecordError(line_no, f"invalid JSON: {exc.msg}") from None
            if not isinstance(row, dict):
                raise RecordError(line_no, "record is not a JSON object")
            records.append(parse_record(row, line_no))
    return records


def _read_csv(path: Path) -> list[TrialRecord]:
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        return []
    except pd.errors.ParserError as exc:
        match = re.search(r"line (\d+)", str(exc))
        line = int(match.group(1)) if match else 0
        raise RecordError(line, "malformed CSV row") from None

    # header is line 1
    return [
        parse_record(row, index + 2)
        for index, row in enumerate(frame.to_dict(orient="records"))
    ]


def read_raw_records(path: str | Path) -> list[TrialRecord]:
    """
    Load raw records from a ``.jsonl`` or ``.csv`` file.

    Raises
    ------
    RecordError
        If a record is malformed, or the file holds no records.
    """
    path = Path(path)
    if path.suffix in (".jsonl", ".json"):
        records = _read_jsonl(path)
    else:
        records = _read_csv(path)

    if not records:
        raise RecordError(0, f"{path} contains no records")

    logger.debug("read %d raw records from %s", len(records), path)
    return records


def append_raw_jsonl(record: TrialRecord, path: str | Path) -> None:
    with Path(path).open("a", encoding="utf-8") as handle:
        handle.write(json.dumps(record.to_dict(), sort_keys=True) + "\n")


def write_raw_jsonl(records: Iterable[TrialRecord], path: str | Path) -> Path:
    path = Path(path)
    with path.open("w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record.to_dict(), sort_keys=True) + "\n")
    logger.debug("wrote %s", path)
    return path


def write_raw_csv(records: Iterable[TrialRecord], path: str | Path) -> Path:
    path = Path(path)
    pd.DataFrame(
        [r.to_dict() for r in records], columns=TrialRecord.field_names()
    ).to_csv(path, index=False)
    logger.debug("wrote %s", path)
    return path


# ---------------------------------------------------------------------------
# failures
# ---------------------------------------------------------------------------

def write_failures(failures: Iterable[TrialFailure], path: str | Path) -> Path:
    path = Path(path)
    path.write_text(
        _dump_json([f.to_dict() for f in failures]), encoding="utf-8"
    )
    logger.debug("wrote %s", path)
    return path


def read_failures(path: str | Path) -> list[TrialFailure]:
    """Failures written by ``write_failures``; empty if the file is absent."""
    path = Path(path)
    if not path.exists():
        return []
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
        return [TrialFailure(**entry) for entry in payload]
    except (json.JSONDecodeError, TypeError) as exc:
        raise RecordError(0, f"{path}: malformed failures file ({exc})") from None


# ---------------------------------------------------------------------------
# summaries
# ---------------------------------------------------------------------------

def write_summary(table: SummaryTable, path: str | Path) -> Path:
    path = Path(path)
    table.to_frame().to_csv(path, index=False)
    logger.debug("wrote %s", path)
    return path


def write_heatmaps(table: SummaryTable, out_dir: str | Path) -> list[Path]:
    """
    One CSV per statistic, site, variant and swarm size.

    Each file has a header row of black proportions and a leading column
    of informed proportions.
    """
    out_dir = Path(out_dir)
    written = []

    for n, variant in table.groups():
        for statistic in STATISTICS:
            for site in SITES:
                if statistic == "error" and site == "elsewhere":
                    continue
                matrix = table.heatmap(n, variant, site, statistic)
                path = out_dir / heatmap_filename(statistic, site, variant, n)
                matrix.rename_axis(
                    index="rho_informed", columns=None
                ).to_csv(path)
                written.append(path)

    logger.debug("wrote %d heatmaps to %s", len(written), out_dir)
    return written


def write_sweep_outputs(
    table: SummaryTable,
    out_dir: str | Path,
    previous: Iterable[TrialRecord] = (),
) -> list[Path]:
    """
    Raw records, summary, heatmaps and failures of a sweep.

    Records in ``previous`` that fall outside the sweep, such as those
    of an earlier sweep into the same directory, are kept in the raw files
    after the sweep's own records. Summaries and heatmaps cover the sweep
    only.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    own = {record.key for record in table.records}
    kept = [record for record in previous if record.key not in own]
    if kept:
        logger.warning(
            "keeping %d raw record(s) from outside this sweep in %s",
            len(kept), out_dir / RAW_JSONL,
        )
    raw = [*table.records, *kept]

    return [
        write_raw_csv(raw, out_dir / RAW_CSV),
        write_raw_jsonl(raw, out_dir / RAW_JSONL),
        write_summary(table, out_dir / SUMMARY_CSV),
        *write_heatmaps(table, out_dir),
        write_failures(table.failures, out_dir / FAILURES_JSON),
    ]


def write_symmetry_outputs(report: SymmetryReport, out_dir: str | Path) -> list[Path]:
    """Histogram, raw records and a JSON report of a symmetry-breaking run."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    histogram_path = out_dir / HISTOGRAM_CSV
    report.histogram.to_csv(histogram_path, index=False)

    report_path = out_dir / "symmetry.json"
    report_path.write_text(_dump_json(report.to_dict()), encoding="utf-8")

    written = [
        histogram_path,
        report_path,
        write_raw_csv(report.records, out_dir / RAW_CSV),
        write_failures(report.failures, out_dir / FAILURES_JSON),
    ]
    logger.debug("wrote symmetry outputs to %s", out_dir)
    return written
