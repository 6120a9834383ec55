"""Parameter sweeps reproducing the two worked examples."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..classic import fb_bound, pb_bound
from ..core import variance
from ..errors import BadFixtureShape
from ..multi import all_matchings, composite_bound, resolve_multi, theorem2_bounds, weighted_sov
from ..pair import WeightPair, resolve_decomposition, theorem1_bounds
from ..pair import weighted_sov as pair_sov
from .fixtures import Fixture


@dataclass
class SweepResult:
    grid: list[float]
    columns: dict[str, list[float]] = field(default_factory=dict)

    def rows(self, names: list[str]) -> list[list[float]]:
        return [list(r) for r in zip(self.grid, *(self.columns[n] for n in names))]

    def __len__(self) -> int:
        return len(self.grid)


def fig1_point(fx: Fixture, abs_a: float) -> tuple[float, float, float]:
    """``(sov, lower, upper)`` at one point of the ``|a|^2 + |b|^2 = 1`` path.

    The case with fixed ``(m, n)`` needs ``b != 0`` and the case with fixed
    ``(m_t, n_t)`` needs ``a != 0``; every admissible case is evaluated and
    the tightest pair of bounds kept.
    """
    a_obs, b_obs = fx.observables
    w = WeightPair(*fx.weights.x)
    s = fx.state_at()
    a = float(abs_a)
    b = float(np.sqrt(max(1.0 - a * a, 0.0)))
    los, his = [], []
    for case in fx.param_cases.values():
        fixed_mn = "m" in case
        if (fixed_mn and b == 0) or (not fixed_mn and a == 0):
            continue
        d = resolve_decomposition(w, a, b, **case)
        lo, hi = theorem1_bounds(a_obs, b_obs, s, w, d, allow_degenerate=True)
        los.append(lo)
        his.append(hi)
    return pair_sov(a_obs, b_obs, s, w), max(los), min(his)


def sweep_abs_a(fx: Fixture, grid) -> SweepResult:
    if len(fx.observables) != 2 or fx.state is None:
        raise BadFixtureShape("sweep_abs_a needs a fixed state and two observables")
    grid = [float(g) for g in grid]
    if any(not 0.0 <= g <= 1.0 for g in grid):
        raise BadFixtureShape("|a| grid must lie in [0, 1]")
    res = SweepResult(grid, {"sov": [], "lower": [], "upper": []})
    for g in grid:
        sov, lo, hi = fig1_point(fx, g)
        res.columns["sov"].append(sov)
        res.columns["lower"].append(lo)
        res.columns["upper"].append(hi)
    return res


def sweep_theta(fx: Fixture, grid) -> SweepResult:
    """SOV, Theorem-2 bounds, FB, PB and matching composites per angle."""
    if fx.state_family is None or len(fx.observables) != 4:
        raise BadFixtureShape("sweep_theta needs a state family and four observables")
    obs = list(fx.observables)
    w = fx.weights
    lb_ub = fx.param_cases["lb_ub"]
    decomp = resolve_multi(w, lb_ub["a"], lb_ub["b"], lb_ub["m"], lb_ub["n"])
    matchings = all_matchings(len(obs))
    names = ["sov", "lb", "ub", "fb", "pb", "tb1", "tbm", "tb2"]
    names += [f"var_{i + 1}" for i in range(len(obs))]
    grid = [float(g) for g in grid]
    res = SweepResult(grid, {n: [] for n in names})
    for theta in grid:
        s = fx.state_at(theta)
        lb, ub = theorem2_bounds(obs, s, w, decomp)
        tbm, tb1 = composite_bound(obs, s, matchings, fx.param_cases["tb"], w)
        _, tb2 = composite_bound(obs, s, matchings, fx.param_cases["tb2"], w)
        row = {
            "sov": weighted_sov(obs, s, w),
            "lb": lb, "ub": ub,
            "fb": fb_bound(obs, s), "pb": pb_bound(obs, s),
            "tb1": tb1, "tbm": tbm, "tb2": tb2,
        }
        for i, o in enumerate(obs):
            row[f"var_{i + 1}"] = variance(o, s)
        for k, v in row.items():
            res.columns[k].append(v)
    return res


def theta_grid(points: int = 201, lo: float = 0.0, hi: float = np.pi) -> list[float]:
    return list(np.linspace(lo, hi, points))


def abs_a_grid(points: int = 101) -> list[float]:
    return list(np.linspace(0.0, 1.0, points))
