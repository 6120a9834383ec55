"""Embedded numerical fixtures for the two worked examples.

Values are stored exactly as printed (four decimals, three for the
two-observable weights and free parameters).  The printed 4-dimensional ket
is not unit-norm at that precision; it is renormalized on load and the
printed entries are kept in ``Fixture.printed`` for round-tripping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..core import SIGMA_X, SIGMA_Y, SIGMA_Z, Observable, State, make_state
from ..multi import PairCase, WeightVector

FIG1_KET = np.array([0.1452 + 0.3194j, 0.4672 + 0.3066j, 0.3373 + 0.5010j, 0.2174 + 0.3905j])

FIG1_A1 = np.array([
    [5.2528, 4.1553, 1.2229, 3.0871],
    [4.1553, 5.0443, 1.1295, 3.0669],
    [1.2229, 1.1295, 0.8441, 1.2898],
    [3.0871, 3.0669, 1.2898, 3.6033],
])
FIG1_A2 = np.array([
    [0, -1.6562, -0.2396, -0.3176],
    [1.6562, 0, -0.1069, 0.1638],
    [0.2396, 0.1069, 0, 0.3284],
    [0.3176, -0.1638, -0.3284, 0],
])
FIG1_B1 = np.array([
    [0.9238, 1.0856, 0.6217, 0.3696],
    [1.0856, 2.1550, 1.1369, 0.5446],
    [0.6217, 1.1369, 0.6471, 0.2780],
    [0.3696, 0.5446, 0.2780, 0.1765],
])
FIG1_B2 = np.array([
    [0, -1.0209, -0.0365, 0.8770],
    [1.0209, 0, 1.0103, 1.0176],
    [0.0365, -1.0103, 0, 0.3580],
    [-0.8770, -1.0176, -0.3580, 0],
])
FIG1_X = 0.267 + 0.769j
FIG1_Y = -0.234 + 0.158j
# case "a -> 0": (m, n) fixed, (m_t, n_t) derived; case "b -> 0": the reverse
FIG1_M, FIG1_N = 1.231 - 0.317j, 1.920 + 0.701j
FIG1_MT, FIG1_NT = 0.501 + 0.213j, -1.027 + 0.104j

FIG2_PHASE = 0.6607 - 0.7507j
FIG2_A4 = np.array([
    [0.8811, 0.3876 - 0.2000j],
    [0.3876 + 0.2000j, 0.2403],
])
FIG2_AK = 0.03
FIG2_B = np.array([
    0.1419 - 0.7572j, 0.4064 - 0.1821j, 0.5931 - 0.6196j,
    0.8094 - 0.7699j, 0.4706 - 0.4211j, 0.6741 - 0.4390j,
])
FIG2_M = np.array([
    0.4888 + 0.8208j, 0.2168 + 0.1228j, 0.8329 + 0.6494j,
    0.5015 + 0.7366j, 0.1027 + 0.7107j, 0.3644 + 0.1053j,
])
FIG2_N = np.array([
    0.9586 + 0.3085j, 0.4237 + 0.1309j, 0.5601 + 0.3435j,
    0.0988 + 0.6631j, 0.4831 + 0.5162j, 0.1536 + 0.7967j,
])


@dataclass(frozen=True, eq=False)
class Fixture:
    name: str
    observables: tuple[Observable, ...]
    weights: WeightVector
    param_cases: dict
    state: State | None = None
    state_family: Callable[[float], State] | None = None
    printed: dict = field(default_factory=dict)

    def state_at(self, theta: float | None = None) -> State:
        if self.state is not None:
            return self.state
        return self.state_family(theta)


def fig1_state() -> State:
    return make_state(ket=FIG1_KET / np.linalg.norm(FIG1_KET))


def fixture_fig1() -> Fixture:
    a = Observable(FIG1_A1 + 1j * FIG1_A2)
    b = Observable(-FIG1_B1 + 1j * FIG1_B2)
    return Fixture(
        name="fig1",
        observables=(a, b),
        weights=WeightVector((FIG1_X, FIG1_Y)),
        state=fig1_state(),
        param_cases={
            "a_to_zero": {"m": FIG1_M, "n": FIG1_N},
            "b_to_zero": {"m_t": FIG1_MT, "n_t": FIG1_NT},
        },
        printed={"ket": FIG1_KET, "A1": FIG1_A1, "A2": FIG1_A2, "B1": FIG1_B1, "B2": FIG1_B2},
    )


def fig2_state(theta: float, phase: complex = FIG2_PHASE) -> State:
    """``[cos(theta/2) e^{i phi}, sin(theta/2)]`` with the printed phase renormalized."""
    ph = phase / abs(phase)
    return make_state(ket=np.array([np.cos(theta / 2) * ph, np.sin(theta / 2)]))


def fixture_fig2() -> Fixture:
    return Fixture(
        name="fig2",
        observables=(SIGMA_X, SIGMA_Y, SIGMA_Z, Observable(FIG2_A4)),
        weights=WeightVector.ones(4),
        state_family=fig2_state,
        param_cases={
            "lb_ub": {"a": FIG2_AK, "b": FIG2_B, "m": FIG2_M, "n": FIG2_N},
            "tb": [PairCase(0.5, 5, m=2, n=1), PairCase(0.5, 5, m_t=1, n_t=1)],
            "tb2": [PairCase(0.01, 1, m=2, n=1), PairCase(0.01, 1, m_t=1, n_t=1)],
        },
        printed={"phase": FIG2_PHASE, "A4": FIG2_A4, "b": FIG2_B, "m": FIG2_M, "n": FIG2_N},
    )


def format_printed(values: np.ndarray, decimals: int = 4) -> list[str]:
    """Render values the way they were printed, e.g. ``0.1452 + 0.3194i``."""
    out = []
    for v in np.ravel(values):
        v = complex(v)
        re = f"{v.real:.{decimals}f}"
        if v.imag == 0:
            out.append(re)
        else:
            sign = "-" if v.imag < 0 else "+"
            out.append(f"{re} {sign} {abs(v.imag):.{decimals}f}i")
    return out
