import pytest
import yaml

from swarmkit.cli import (
    build_sweep,
    build_trial_config,
    default_settings,
    dump_settings,
    load_config_file,
    merge_settings,
)
from swarmkit.controller import Variant
from swarmkit.errors import ConfigurationError


def test__defaults_build():
    settings = default_settings()
    config = build_trial_config(settings)

    assert config.swarm_size == 50
    assert config.variant is Variant.SIMPLIFIED
    assert config.arena.arena_diameter == 12.9
    assert config.body.line_of_sight


def test__line_of_sight_can_be_switched_off():
    config = build_trial_config(merge_settings({"line_of_sight": False}))

    assert config.body.occluder_radius is None


def test__merge_precedence():
    merged = merge_settings(
        {"swarm_size": 100, "seed": 4},
        {"seed": 9, "rho_black": None},
    )

    assert merged["swarm_size"] == 100
    assert merged["seed"] == 9
    assert merged["rho_black"] == default_settings()["rho_black"]


def test__merge_does_not_alias_defaults():
    merged = merge_settings()
    merged["swarm_sizes"].append(7)

    assert 7 not in default_settings()["swarm_sizes"]


def test__unknown_key():
    with pytest.raises(ConfigurationError) as info:
        merge_settings({"swarm_sise": 50})

    assert info.value.field == "swarm_sise"


def test__load_config_file(tmp_path):
    path = tmp_path / "c.yaml"
    path.write_text("swarm_size: 100\nrho_black: 0.5\n")

    assert load_config_file(path) == {"swarm_size": 100, "rho_black": 0.5}


def test__load_empty_config_file(tmp_path):
    path = tmp_path / "c.yaml"
    path.write_text("")

    assert load_config_file(path) == {}


def test__load_non_mapping(tmp_path):
    path = tmp_path / "c.yaml"
    path.write_text("- 1\n- 2\n")

    with pytest.raises(ConfigurationError) as info:
        load_config_file(path)

    assert info.value.field == "config"


def test__dump_and_reload(tmp_path):
    settings = merge_settings({"rho_black_values": [0.5, 1.0], "seed": 3})
    path = tmp_path / "c.yaml"
    path.write_text(dump_settings(settings))

    reloaded = merge_settings(load_config_file(path))

    assert reloaded == settings
    assert list(yaml.safe_load(dump_settings(settings)))[0] == "swarm_size"


@pytest.mark.parametrize(
    "overrides, field",
    [
        ({"swarm_size": "50"}, "swarm_size"),
        ({"rho_informed": 1.2}, "rho_informed"),
        ({"variant": "greedy"}, "variant"),
        ({"swarm_size": 75}, "arena_diameter"),
        ({"line_of_sight": "yes"}, "line_of_sight"),
    ],
)
def test__trial_config_errors(overrides, field):
    with pytest.raises(ConfigurationError) as info:
        build_trial_config(merge_settings(overrides))

    assert info.value.field == field


def test__build_sweep():
    spec, shared = build_sweep(merge_settings({
        "swarm_sizes": [50],
        "rho_informed_values": [0.3],
        "rho_black_values": [0.5, 1.0],
        "variants": ["baseline"],
        "trials_per_cell": 2,
        "duration": 10.0,
    }))

    assert spec.n_trials == 4
    assert spec.variants == (Variant.BASELINE,)
    assert shared.duration == 10.0


@pytest.mark.parametrize(
    "overrides, field",
    [
        ({"swarm_sizes": 50}, "swarm_sizes"),
        ({"workers": 0}, "workers"),
        ({"trials_per_cell": 0}, "trials_per_cell"),
        ({"swarm_sizes": [60]}, "arena_diameter"),
    ],
)
def test__build_sweep_errors(overrides, field):
    with pytest.raises(ConfigurationError) as info:
        build_sweep(merge_settings(overrides))

    assert info.value.field == field
