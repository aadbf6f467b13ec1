from .statistics import median_and_iqr
from .summary import (
    CellSummary,
    SummaryTable,
    TrialFailure,
    TrialRecord,
    summarize_records,
)
from .sweep import (
    CellKey,
    SharedSettings,
    SweepSpec,
    derive_seed,
    plan_tasks,
    run_sweep,
    sweep_definition,
)
from .symmetry import (
    HISTOGRAM_COLUMNS,
    SymmetryReport,
    site_histogram,
    symmetry_breaking_experiment,
)
from .io import (
    append_raw_jsonl,
    heatmap_filename,
    parse_record,
    read_failures,
    read_raw_records,
    write_failures,
    write_heatmaps,
    write_raw_csv,
    write_raw_jsonl,
    write_summary,
    write_sweep_outputs,
    write_symmetry_outputs,
)

__all__ = [
    "median_and_iqr",
    "CellSummary",
    "SummaryTable",
    "TrialFailure",
    "TrialRecord",
    "summarize_records",
    "CellKey",
    "SharedSettings",
    "SweepSpec",
    "derive_seed",
    "plan_tasks",
    "run_sweep",
    "sweep_definition",
    "HISTOGRAM_COLUMNS",
    "SymmetryReport",
    "site_histogram",
    "symmetry_breaking_experiment",
    "append_raw_jsonl",
    "heatmap_filename",
    "parse_record",
    "read_failures",
    "read_raw_records",
    "write_failures",
    "write_heatmaps",
    "write_raw_csv",
    "write_raw_jsonl",
    "write_summary",
    "write_sweep_outputs",
    "write_symmetry_outputs",
]
