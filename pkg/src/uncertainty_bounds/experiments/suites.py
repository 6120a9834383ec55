"""Randomized invariant checks driven by a single seed.

Each instance draws from its own generator seeded with ``(seed, index)``, so
results do not depend on evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import classic
from ..core import pure_to_mixed
from ..multi import WeightVector, resolve_multi, theorem2_bounds, verify_multi_identity, weighted_sov
from ..pair import (
    WeightPair,
    resolve_decomposition,
    theorem1_bounds,
    verify_sum_identity,
)
from ..pair import weighted_sov as pair_sov
from .ensemble import random_complex, random_density_matrix, random_ket, random_observable

TOLERANCES = {"sandwich": 1e-9, "saturation": 1e-10, "identity": 1e-10, "reduction": 1e-10,
              "qubit": 1e-10, "hierarchy": 1e-9, "mixed": 1e-9}


@dataclass
class CheckStats:
    count: int = 0
    failures: int = 0
    max_residual: float = 0.0

    def add(self, residual: float, tol: float) -> bool:
        self.count += 1
        self.max_residual = max(self.max_residual, residual)
        ok = residual <= tol
        if not ok:
            self.failures += 1
        return ok


@dataclass
class SuiteResult:
    instances: int
    failed_instances: list[int] = field(default_factory=list)
    checks: dict[str, CheckStats] = field(default_factory=dict)

    def stat(self, name: str) -> CheckStats:
        return self.checks.setdefault(name, CheckStats())

    @property
    def max_residual(self) -> float:
        return max((c.max_residual for c in self.checks.values()), default=0.0)

    def summary(self, detailed: bool = False) -> dict:
        out = {
            "instances": self.instances,
            "failures": len(self.failed_instances),
            "max_residual": float(f"{self.max_residual:.12g}"),
        }
        if self.failed_instances:
            out["failed_instances"] = self.failed_instances
        if detailed:
            out["checks"] = {
                k: {"count": c.count, "failures": c.failures,
                    "max_residual": float(f"{c.max_residual:.12g}")}
                for k, c in sorted(self.checks.items())
            }
        return out


def _rel_excess(lower: float, value: float, upper: float) -> float:
    """How far ``value`` sits outside ``[lower, upper]``, relative to its size."""
    scale = max(1.0, abs(value))
    return max(lower - value, value - upper, 0.0) / scale


def _rel_diff(p: float, q: float) -> float:
    return abs(p - q) / max(1.0, abs(p), abs(q))


def random_pair_decomposition(rng: np.random.Generator, w: WeightPair):
    a, b, m, n = random_complex(rng, 4)
    return resolve_decomposition(w, a, b, m, n)


def check_pair_instance(rng: np.random.Generator, state, res: SuiteResult, tol=TOLERANCES) -> bool:
    """Sandwich, saturation at a = 0 and b = 0, and the two-term norm identity."""
    d = state.dim
    a_obs, b_obs = random_observable(rng, d), random_observable(rng, d)
    w = WeightPair(*random_complex(rng, 2))
    sov = pair_sov(a_obs, b_obs, state, w)
    ok = True

    dec = random_pair_decomposition(rng, w)
    lo, hi = theorem1_bounds(a_obs, b_obs, state, w, dec)
    ok &= res.stat("theorem1_sandwich").add(_rel_excess(lo, sov, hi), tol["sandwich"])

    m, n, mt, nt = random_complex(rng, 4)
    for a, b, kw in ((0.0, random_complex(rng), {"m": m, "n": n}),
                     (random_complex(rng), 0.0, {"m_t": mt, "n_t": nt})):
        dec = resolve_decomposition(w, a, b, **kw)
        lo, hi = theorem1_bounds(a_obs, b_obs, state, w, dec, allow_degenerate=True)
        r = max(_rel_diff(lo, sov), _rel_diff(hi, sov))
        ok &= res.stat("theorem1_saturation").add(r, tol["saturation"])

    r = verify_sum_identity(a_obs, b_obs, state, w) / (1.0 + 2 * sov)
    ok &= res.stat("sum_identity").add(r, tol["identity"])
    return ok


def check_multi_instance(rng: np.random.Generator, state, n_obs: int, res: SuiteResult,
                         tol=TOLERANCES) -> bool:
    """Multi-observable sandwich, N-term norm identity and the N = 2 reduction."""
    d = state.dim
    obs = [random_observable(rng, d) for _ in range(n_obs)]
    w = WeightVector(tuple(random_complex(rng, n_obs)))
    k = n_obs * (n_obs - 1) // 2
    dec = resolve_multi(w, *(random_complex(rng, k) for _ in range(4)))
    sov = weighted_sov(obs, state, w)
    lo, hi = theorem2_bounds(obs, state, w, dec)
    ok = res.stat("theorem2_sandwich").add(_rel_excess(lo, sov, hi), tol["sandwich"])
    r = verify_multi_identity(obs, state, w) / (1.0 + n_obs * sov)
    ok &= res.stat("multi_identity").add(r, tol["identity"])
    if n_obs == 2:
        lo1, hi1 = theorem1_bounds(obs[0], obs[1], state, w.pair(0, 1), dec.pairs[0])
        r = max(_rel_diff(lo, lo1), _rel_diff(hi, hi1))
        ok &= res.stat("theorem2_reduction").add(r, tol["reduction"])
    return ok


def check_qubit_instance(rng: np.random.Generator, res: SuiteResult, tol=TOLERANCES) -> bool:
    s = random_ket(rng, 2)
    a_obs, b_obs = random_observable(rng, 2), random_observable(rng, 2)
    return res.stat("qubit_l1_identity").add(classic.qubit_l1_identity_gap(a_obs, b_obs, s),
                                             tol["qubit"])


def check_hierarchy_instance(rng: np.random.Generator, state, res: SuiteResult,
                             tol=TOLERANCES) -> bool:
    a_obs, b_obs = random_observable(rng, state.dim), random_observable(rng, state.dim)
    rob = classic.robertson(a_obs, b_obs, state)
    sch = classic.schrodinger(a_obs, b_obs, state)
    prod = classic.product_of_stds(a_obs, b_obs, state)
    ok = res.stat("robertson_le_schrodinger").add(
        max(rob - sch, 0.0) / max(1.0, sch), tol["hierarchy"])
    ok &= res.stat("schrodinger_le_product").add(
        max(sch - prod, 0.0) / max(1.0, prod), tol["hierarchy"])
    return ok


def check_mixed_lift(rng: np.random.Generator, dim: int, res: SuiteResult, tol=TOLERANCES) -> bool:
    """Pure state versus its projector: every bound must agree."""
    pure = random_ket(rng, dim)
    mixed = pure_to_mixed(pure)
    a_obs, b_obs = random_observable(rng, dim), random_observable(rng, dim)
    w = WeightPair(*random_complex(rng, 2))
    dec = random_pair_decomposition(rng, w)
    pairs = []
    for fn in (classic.robertson, classic.schrodinger, classic.mp_l2):
        pairs.append((fn(a_obs, b_obs, pure), fn(a_obs, b_obs, mixed)))
    pairs.append((pair_sov(a_obs, b_obs, pure, w), pair_sov(a_obs, b_obs, mixed, w)))
    for p, q in zip(theorem1_bounds(a_obs, b_obs, pure, w, dec),
                    theorem1_bounds(a_obs, b_obs, mixed, w, dec)):
        pairs.append((p, q))
    obs4 = [a_obs, b_obs, random_observable(rng, dim), random_observable(rng, dim)]
    w4 = WeightVector(tuple(random_complex(rng, 4)))
    dec4 = resolve_multi(w4, *(random_complex(rng, 6) for _ in range(4)))
    for p, q in zip(theorem2_bounds(obs4, pure, w4, dec4), theorem2_bounds(obs4, mixed, w4, dec4)):
        pairs.append((p, q))
    for fn in (classic.fb_bound, classic.pb_bound):
        pairs.append((fn(obs4, pure), fn(obs4, mixed)))
    r = max(_rel_diff(p, q) for p, q in pairs)
    return res.stat("mixed_lift").add(r, tol["mixed"])


def check_mixed_sandwich(rng: np.random.Generator, dim: int, res: SuiteResult,
                         tol=TOLERANCES) -> bool:
    rho = random_density_matrix(rng, dim)
    ok = check_pair_instance(rng, rho, res, tol)
    ok &= check_multi_instance(rng, rho, int(rng.integers(2, 7)), res, tol)
    return ok


def _dim_for(i: int) -> int:
    return 2 + i % 7


def run_verify(seed: int, instances: int, tol=TOLERANCES) -> SuiteResult:
    """Norm identities and sandwich/saturation checks on pure random instances."""
    res = SuiteResult(instances)
    for i in range(instances):
        rng = np.random.default_rng([seed, i])
        state = random_ket(rng, _dim_for(i))
        ok = check_pair_instance(rng, state, res, tol)
        ok &= check_multi_instance(rng, state, 2 + i % 5, res, tol)
        ok &= check_qubit_instance(rng, res, tol)
        if not ok:
            res.failed_instances.append(i)
    return res


def run_random_suite(seed: int, instances: int, tol=TOLERANCES) -> SuiteResult:
    """Everything in ``run_verify`` plus classical hierarchy and mixed states."""
    res = SuiteResult(instances)
    for i in range(instances):
        rng = np.random.default_rng([seed, i])
        dim = _dim_for(i)
        state = random_ket(rng, dim)
        ok = check_pair_instance(rng, state, res, tol)
        ok &= check_multi_instance(rng, state, 2 + i % 5, res, tol)
        ok &= check_qubit_instance(rng, res, tol)
        ok &= check_hierarchy_instance(rng, state, res, tol)
        ok &= check_mixed_lift(rng, dim, res, tol)
        ok &= check_mixed_sandwich(rng, dim, res, tol)
        if not ok:
            res.failed_instances.append(i)
    return res
