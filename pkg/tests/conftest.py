import numpy as np
import pytest

from uncertainty_bounds.core import make_state


@pytest.fixture
def ket0():
    return make_state(ket=[1, 0])


@pytest.fixture
def ket_plus():
    return make_state(ket=np.array([1, 1]) / np.sqrt(2))


@pytest.fixture
def rho_half():
    return make_state(rho=np.eye(2) / 2)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance") or __import__("sys").modules.get(
        "tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results):
        terminalreporter.write_line(results[key])
