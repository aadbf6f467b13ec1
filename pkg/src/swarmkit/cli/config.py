# src/swarmkit/cli/config.py

"""
Flat YAML configuration.

Keys map one to one onto the fields of the trial and sweep dataclasses.
Values are merged with the precedence: built-in defaults < config file
< command-line overrides.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Final, Mapping
import logging

import yaml

from swarmkit.arena.geometry import make_arena
from swarmkit.constants import (
    TABLE1,
    TICK_DT,
    TIMESERIES_INTERVAL,
    TRIAL_DURATION,
)
from swarmkit.controller.types import ControllerParams
from swarmkit.engine.config import TrialConfig
from swarmkit.errors import ConfigurationError
from swarmkit.harness.sweep import SharedSettings, SweepSpec
from swarmkit.robot.types import BodySpec


logger = logging.getLogger(__name__)

_BODY = BodySpec()
_CONTROLLER = ControllerParams()

TRIAL_DEFAULTS: Final[dict[str, Any]] = {
    "swarm_size": 50,
    "rho_informed": 0.3,
    "rho_black": 0.7,
    "variant": "simplified",
    "duration": TRIAL_DURATION,
    "tick_dt": TICK_DT,
    "seed": 1,
    "arena_diameter": None,
    "site_diameter": None,
    "body_radius": _BODY.body_radius,
    "proximity_range": _BODY.proximity_range,
    "comm_range": _BODY.comm_range,
    "line_of_sight": _BODY.line_of_sight,
    "a": _CONTROLLER.a,
    "k": _CONTROLLER.k,
    "alpha": _CONTROLLER.alpha,
    "beta": _CONTROLLER.beta,
    "cauchy_rho": _CONTROLLER.cauchy_rho,
    "straight_duration": _CONTROLLER.straight_duration,
    "entry_forward_duration": _CONTROLLER.entry_forward_duration,
    "fsm_update_period": _CONTROLLER.fsm_update_period,
    "linear_speed": _CONTROLLER.linear_speed,
    "timeseries_interval": TIMESERIES_INTERVAL,
    "max_placement_attempts": 1000,
}

SWEEP_DEFAULTS: Final[dict[str, Any]] = {
    "swarm_sizes": list(TABLE1.swarm_sizes),
    "rho_informed_values": list(TABLE1.rho_informed_values),
    "rho_black_values": list(TABLE1.rho_black_values),
    "variants": ["simplified", "baseline"],
    "trials_per_cell": TABLE1.trials_per_cell,
    "base_seed": 0,
    "workers": 1,
}

OUTPUT_DEFAULTS: Final[dict[str, Any]] = {
    "trajectory_interval": 10.0,
}

KNOWN_KEYS: Final[frozenset[str]] = frozenset(
    {*TRIAL_DEFAULTS, *SWEEP_DEFAULTS, *OUTPUT_DEFAULTS}
)

_BODY_KEYS = ("body_radius", "proximity_range", "comm_range", "line_of_sight")
_CONTROLLER_KEYS = (
    "a", "k", "alpha", "beta", "cauchy_rho", "straight_duration",
    "entry_forward_duration", "fsm_update_period", "linear_speed",
)
_SEQUENCE_KEYS = (
    "swarm_sizes", "rho_informed_values", "rho_black_values", "variants",
)


def default_settings() -> dict[str, Any]:
    """Every known key with its built-in default."""
    settings = {**TRIAL_DEFAULTS, **SWEEP_DEFAULTS, **OUTPUT_DEFAULTS}
    return {
        key: list(value) if isinstance(value, list) else value
        for key, value in settings.items()
    }


def check_keys(settings: Mapping[str, Any]) -> None:
    for key in settings:
        if key not in KNOWN_KEYS:
            raise ConfigurationError(str(key), "unknown configuration key")


def load_config_file(path: str | Path) -> dict[str, Any]:
    """
    Read a flat YAML mapping.

    An empty file is an empty mapping.

    Raises
    ------
    ConfigurationError
        If the document is not a mapping or holds an unknown key.
    OSError
        If the file cannot be read.
    yaml.YAMLError
        If the file is not valid YAML.
    """
    path = Path(path)
    with path.open("r", encoding="utf-8") as handle:
        payload = yaml.safe_load(handle)

    if payload is None:
        return {}
    if not isinstance(payload, dict):
        raise ConfigurationError("config", f"{path} is not a key/value mapping")

    check_keys(payload)
    logger.debug("loaded %d keys from %s", len(payload), path)
    return dict(payload)


def merge_settings(
    *layers: Mapping[str, Any] | None,
) -> dict[str, Any]:
    """
    Overlay ``layers`` left to right on the defaults.

    ``None`` values in a layer leave the lower layer untouched, so unset
    command-line flags never mask the config file.
    """
    merged = default_settings()
    for layer in layers:
        if not layer:
            continue
        check_keys(layer)
        for key, value in layer.items():
            if value is not None:
                merged[key] = value
    return merged


def _require_sequence(settings: Mapping[str, Any], key: str) -> tuple:
    value = settings[key]
    if isinstance(value, (str, bytes)) or not isinstance(value, (list, tuple)):
        raise ConfigurationError(key, "must be a list")
    return tuple(value)


def build_body(settings: Mapping[str, Any]) -> BodySpec:
    return BodySpec(**{key: settings[key] for key in _BODY_KEYS})


def build_controller(settings: Mapping[str, Any]) -> ControllerParams:
    return ControllerParams(**{key: settings[key] for key in _CONTROLLER_KEYS})


def build_trial_config(settings: Mapping[str, Any]) -> TrialConfig:
    """
    Trial definition from merged settings.

    Raises
    ------
    ConfigurationError
        Naming the first offending key.
    """
    swarm_size = settings["swarm_size"]
    if isinstance(swarm_size, bool) or not isinstance(swarm_size, int):
        raise ConfigurationError("swarm_size", "must be a positive integer")

    return TrialConfig(
        swarm_size=swarm_size,
        rho_informed=settings["rho_informed"],
        rho_black=settings["rho_black"],
        variant=settings["variant"],
        arena=make_arena(
            swarm_size, settings["arena_diameter"], settings["site_diameter"]
        ),
        body=build_body(settings),
        controller=build_controller(settings),
        duration=settings["duration"],
        tick_dt=settings["tick_dt"],
        seed=settings["seed"],
        timeseries_interval=settings["timeseries_interval"],
        max_placement_attempts=settings["max_placement_attempts"],
    )


def build_sweep(settings: Mapping[str, Any]) -> tuple[SweepSpec, SharedSettings]:
    """Sweep grid and the settings shared by all of its trials."""
    spec = SweepSpec(
        **{key: _require_sequence(settings, key) for key in _SEQUENCE_KEYS},
        trials_per_cell=settings["trials_per_cell"],
        base_seed=settings["base_seed"],
    )
    shared = SharedSettings(
        body=build_body(settings),
        controller=build_controller(settings),
        duration=settings["duration"],
        tick_dt=settings["tick_dt"],
        arena_diameter=settings["arena_diameter"],
        site_diameter=settings["site_diameter"],
        max_placement_attempts=settings["max_placement_attempts"],
    )

    workers = settings["workers"]
    if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
        raise ConfigurationError("workers", "must be a positive integer")

    # every cell's trial config must validate before any trial starts
    for cell in spec.cells():
        shared.trial_config(cell, seed=0)

    return spec, shared


def table1_overrides() -> dict[str, Any]:
    """Sweep keys selecting the full standard grid with both variants."""
    return {
        "swarm_sizes": list(TABLE1.swarm_sizes),
        "rho_informed_values": list(TABLE1.rho_informed_values),
        "rho_black_values": list(TABLE1.rho_black_values),
        "variants": ["simplified", "baseline"],
        "trials_per_cell": TABLE1.trials_per_cell,
    }


def dump_settings(settings: Mapping[str, Any]) -> str:
    """YAML text of ``settings``, keys in definition order."""
    ordered = {key: settings[key] for key in default_settings() if key in settings}
    for key in _SEQUENCE_KEYS:
        if key in ordered:
            ordered[key] = list(ordered[key])
    return yaml.safe_dump(ordered, sort_keys=False, default_flow_style=None)


def write_settings(settings: Mapping[str, Any], path: str | Path) -> Path:
    path = Path(path)
    path.write_text(dump_settings(settings), encoding="utf-8")
    logger.debug("wrote %s", path)
    return path
