import pandas as pd
import pytest

from swarmkit.engine import TrajectoryRecorder, TrialConfig, run_trial
from swarmkit.engine.trajectory import COLUMNS


def test__recorder__samples_on_interval(tmp_path):
    recorder = TrajectoryRecorder(interval=1.0)
    run_trial(
        TrialConfig(duration=3.0, timeseries_interval=None, seed=2),
        recorder=recorder,
    )

    frame = recorder.to_frame()
    assert list(frame.columns) == COLUMNS
    assert len(frame) == 4 * 50
    assert sorted(frame["t"].round(6).unique()) == [0.0, 1.0, 2.0, 3.0]
    assert set(frame["macro_state"]) <= {"random_walk", "stay", "leave"}

    path = recorder.write_csv(tmp_path / "trajectory.csv")
    assert pd.read_csv(path).shape == (200, 5)


def test__recorder__empty_frame_has_columns():
    assert list(TrajectoryRecorder().to_frame().columns) == COLUMNS


def test__recorder__rejects_nonpositive_interval():
    with pytest.raises(ValueError):
        TrajectoryRecorder(interval=0.0)
