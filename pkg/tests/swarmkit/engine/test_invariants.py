"""Randomized micro-simulations checking per-tick swarm invariants."""

import numpy as np
import pytest

from swarmkit.arena import make_arena, site_labels
from swarmkit.controller import MacroState, Variant
from swarmkit.engine import TrialConfig, init_trial, tick
from swarmkit.robot import RobotKind

N_TICKS = 1000


def micro_config(variant, rho_informed, seed):
    return TrialConfig(
        swarm_size=10,
        rho_informed=rho_informed,
        rho_black=0.5,
        variant=variant,
        arena=make_arena(10, 4.0, 1.6),
        duration=N_TICKS * 0.1,
        timeseries_interval=None,
        seed=seed,
    )


@pytest.mark.integration
@pytest.mark.parametrize("variant", list(Variant))
@pytest.mark.parametrize("seed", [0, 1])
def test__micro_simulation_invariants(variant, seed):
    state = init_trial(micro_config(variant, 0.4, seed))
    r = state.config.body.body_radius
    limit = state.arena.arena_radius - r
    informed = state.kinds != RobotKind.NON_INFORMED
    preferred = np.where(state.kinds == RobotKind.INFORMED_BLACK, 0, 1)

    informed_staying = np.zeros(state.size, dtype=bool)

    for _ in range(N_TICKS):
        tick(state)

        assert state.positions.shape == (10, 2)
        assert np.all(np.hypot(*state.positions.T) <= limit + 1e-9)

        d = np.hypot(*(state.positions[:, None] - state.positions[None]).transpose(2, 0, 1))
        np.fill_diagonal(d, np.inf)
        assert d.min() >= 2.0 * r - 1e-9

        staying = state.controller.macro == MacroState.STAY
        # informed robots never leave Stay
        assert np.all(staying[informed_staying])
        informed_staying |= staying & informed

        # informed robots stay strictly on their own site
        labels = site_labels(state.arena, state.positions)
        settled = staying & informed
        np.testing.assert_array_equal(labels[settled], preferred[settled])


@pytest.mark.integration
@pytest.mark.parametrize("seed", [0, 1, 2])
def test__baseline_without_informed_never_enters_stay(seed):
    state = init_trial(micro_config(Variant.BASELINE, 0.0, seed))

    for _ in range(N_TICKS):
        tick(state)
        assert not np.any(state.controller.macro == MacroState.STAY)


@pytest.mark.integration
def test__fsm_update_count():
    config = micro_config(Variant.SIMPLIFIED, 0.4, 0)
    state = init_trial(config)

    for _ in range(config.n_ticks):
        tick(state)

    assert state.fsm_updates == int(config.duration // config.controller.fsm_update_period)


@pytest.mark.integration
def test__same_seed_same_positions_every_tick():
    a = init_trial(micro_config(Variant.SIMPLIFIED, 0.4, 5))
    b = init_trial(micro_config(Variant.SIMPLIFIED, 0.4, 5))

    for _ in range(300):
        tick(a)
        tick(b)
        np.testing.assert_array_equal(a.positions, b.positions)
        np.testing.assert_array_equal(a.controller.macro, b.controller.macro)
