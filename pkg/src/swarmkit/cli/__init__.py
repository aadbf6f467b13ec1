from .config import (
    build_sweep,
    build_trial_config,
    default_settings,
    dump_settings,
    load_config_file,
    merge_settings,
    table1_overrides,
)
from .main import build_parser, main

__all__ = [
    "build_sweep",
    "build_trial_config",
    "default_settings",
    "dump_settings",
    "load_config_file",
    "merge_settings",
    "table1_overrides",
    "build_parser",
    "main",
]
