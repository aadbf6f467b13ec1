import hypothesis
import numpy as np
import pytest

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=10)
hypothesis.settings.register_profile("thorough", max_examples=500)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False)


class StubRng:
    """
    Replays fixed uniforms in ``[0, 1)`` in place of a ``Generator``.

    ``random`` and ``uniform`` consume the same queue, so a test lists the
    draws in the order the code under test takes them.
    """

    def __init__(self, *values: float) -> None:
        self._values = list(values)
        self.calls: list[str] = []

    def _take(self, size):
        count = 1 if size is None else int(size)
        if count > len(self._values):
            raise AssertionError("StubRng ran out of values")
        taken = np.array(self._values[:count], dtype=np.float64)
        del self._values[:count]
        return float(taken[0]) if size is None else taken

    def random(self, size=None):
        self.calls.append("random")
        return self._take(size)

    def uniform(self, low=0.0, high=1.0, size=None):
        self.calls.append("uniform")
        return low + (high - low) * self._take(size)

    @property
    def remaining(self) -> int:
        return len(self._values)


@pytest.fixture
def stub_rng():
    return StubRng
