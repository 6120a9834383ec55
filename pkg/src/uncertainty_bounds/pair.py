"""Improvable upper and lower bounds for two observables.

For weights ``(x, y)`` the weighted sum of variances
``|x|^2 dA^2 + |y|^2 dB^2`` is bracketed by

    B_pm = 1/2 [ Bq(x, y) + (|a| B(m, n) +- |b| B(mt, nt))^2 ]

where ``Bq(alpha, beta) = ||alpha psi_A + beta psi_B||^2`` is evaluated from
variances and the commutator (``b_quadratic``), ``B = sqrt(Bq)``, and the
free parameters satisfy ``x = a m + b mt`` and ``-y = a n + b nt``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    Observable,
    State,
    _check_dims,
    combine,
    commutator_expectation,
    deviation_vector,
    variance,
)
from .errors import (
    BadParams,
    ConstraintViolated,
    DegenerateDecomposition,
    NegativeNormSquare,
    SingularSolve,
)

CONSTRAINT_TOL = 1e-10
NEG_NORM_TOL = 1e-10


@dataclass(frozen=True)
class WeightPair:
    x: complex
    y: complex

    def __post_init__(self):
        object.__setattr__(self, "x", complex(self.x))
        object.__setattr__(self, "y", complex(self.y))
        if self.x == 0 and self.y == 0:
            raise BadParams("at least one weight must be nonzero")


@dataclass(frozen=True)
class PairDecomposition:
    """Free parameters ``(a, b, m, n, m_t, n_t)`` for one weight pair."""

    a: complex
    b: complex
    m: complex
    n: complex
    m_t: complex
    n_t: complex

    def residues(self, w: WeightPair) -> tuple[float, float]:
        r1 = abs(w.x - (self.a * self.m + self.b * self.m_t))
        r2 = abs(-w.y - (self.a * self.n + self.b * self.n_t))
        return r1, r2

    def check(self, w: WeightPair) -> None:
        tol = CONSTRAINT_TOL * (1.0 + abs(w.x) + abs(w.y))
        r1, r2 = self.residues(w)
        if r1 > tol or r2 > tol:
            raise ConstraintViolated(f"constraint residues {r1:.3e}, {r2:.3e} exceed {tol:.3e}")

    @property
    def is_degenerate(self) -> bool:
        return self.a == 0 or self.b == 0


def _weighted_sum(c1: float, c2: float, a: Observable, b: Observable) -> Observable:
    return Observable(c1 * a.matrix + c2 * b.matrix)


def b_quadratic(alpha: complex, beta: complex, a: Observable, b: Observable, s: State) -> float:
    """``||alpha psi_A + beta psi_B||^2`` via variances of real combinations.

    Uses ``var(a1 A + b1 B) + var(a2 A + b2 B) + (a1 b2 - b1 a2) i<[A,B]>``
    with ``alpha = a1 + i a2`` and ``beta = b1 + i b2``.
    """
    _check_dims(a.dim, b.dim, s.dim)
    alpha, beta = complex(alpha), complex(beta)
    a1, a2, b1, b2 = alpha.real, alpha.imag, beta.real, beta.imag
    val = (
        variance(_weighted_sum(a1, b1, a, b), s)
        + variance(_weighted_sum(a2, b2, a, b), s)
        + (a1 * b2 - b1 * a2) * commutator_expectation(a, b, s)
    )
    scale = 1.0 + (abs(alpha) ** 2 + abs(beta) ** 2) * (variance(a, s) + variance(b, s))
    if val < -NEG_NORM_TOL * scale:
        raise NegativeNormSquare(f"squared norm evaluated to {val!r}")
    return max(val, 0.0)


def b_norm(alpha: complex, beta: complex, a: Observable, b: Observable, s: State) -> float:
    return float(np.sqrt(b_quadratic(alpha, beta, a, b, s)))


def resolve_decomposition(
    w: WeightPair,
    a: complex,
    b: complex,
    m: complex | None = None,
    n: complex | None = None,
    *,
    m_t: complex | None = None,
    n_t: complex | None = None,
) -> PairDecomposition:
    """Solve the two linear constraints for the dependent parameter pair.

    Give ``(m, n)`` to derive ``(m_t, n_t)`` (needs ``b != 0``), or give
    ``(m_t, n_t)`` to derive ``(m, n)`` (needs ``a != 0``).  If the required
    coefficient vanishes, the given pair must already satisfy the constraints
    on its own and the dependent pair is set to zero.
    """
    a, b = complex(a), complex(b)
    if a == 0 and b == 0:
        raise SingularSolve("a and b are both zero")
    given_mn = m is not None or n is not None
    given_t = m_t is not None or n_t is not None
    if given_mn == given_t:
        raise BadParams("give exactly one of (m, n) or (m_t, n_t)")
    if given_mn:
        if m is None or n is None:
            raise BadParams("m and n must be given together")
        m, n = complex(m), complex(n)
        if b != 0:
            d = PairDecomposition(a, b, m, n, (w.x - a * m) / b, (-w.y - a * n) / b)
        else:
            d = PairDecomposition(a, b, m, n, 0j, 0j)
    else:
        if m_t is None or n_t is None:
            raise BadParams("m_t and n_t must be given together")
        m_t, n_t = complex(m_t), complex(n_t)
        if a != 0:
            d = PairDecomposition(a, b, (w.x - b * m_t) / a, (-w.y - b * n_t) / a, m_t, n_t)
        else:
            d = PairDecomposition(a, b, 0j, 0j, m_t, n_t)
    d.check(w)
    return d


def theorem1_bounds(
    a_obs: Observable,
    b_obs: Observable,
    s: State,
    w: WeightPair,
    d: PairDecomposition,
    *,
    allow_degenerate: bool = False,
) -> tuple[float, float]:
    """Return ``(lower, upper)`` bracketing ``|x|^2 dA^2 + |y|^2 dB^2``.

    ``allow_degenerate`` admits ``a = 0`` or ``b = 0``, where both bounds
    collapse onto the weighted sum (saturation-check mode).
    """
    _check_dims(a_obs.dim, b_obs.dim, s.dim)
    d.check(w)
    if d.is_degenerate and not allow_degenerate:
        raise DegenerateDecomposition("|ab| = 0 gives no uncertainty relation")
    head = b_quadratic(w.x, w.y, a_obs, b_obs, s)
    t1 = abs(d.a) * b_norm(d.m, d.n, a_obs, b_obs, s)
    t2 = abs(d.b) * b_norm(d.m_t, d.n_t, a_obs, b_obs, s)
    lower = 0.5 * (head + (t1 - t2) ** 2)
    upper = 0.5 * (head + (t1 + t2) ** 2)
    return lower, upper


def weighted_sov(a_obs: Observable, b_obs: Observable, s: State, w: WeightPair) -> float:
    return abs(w.x) ** 2 * variance(a_obs, s) + abs(w.y) ** 2 * variance(b_obs, s)


def verify_sum_identity(a_obs: Observable, b_obs: Observable, s: State, w: WeightPair) -> float:
    """Residual of ``||x u + y v||^2 + ||x u - y v||^2 = 2||x u||^2 + 2||y v||^2``.

    Computed directly on the deviation vectors, independent of
    ``b_quadratic``.
    """
    u = deviation_vector(a_obs, s)
    v = deviation_vector(b_obs, s)
    _check_dims(a_obs.dim, b_obs.dim)
    lhs = combine([w.x, w.y], [u, v]).norm_sq() + combine([w.x, -w.y], [u, v]).norm_sq()
    rhs = 2 * abs(w.x) ** 2 * u.norm_sq() + 2 * abs(w.y) ** 2 * v.norm_sq()
    return abs(lhs - rhs)
