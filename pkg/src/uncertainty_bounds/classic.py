"""Reference variance bounds: Robertson, Schrodinger, Maccone-Pati, FB and PB.

Product-form bounds (``robertson``, ``schrodinger``) bound ``dA * dB``.
Sum-form bounds bound ``dA^2 + dB^2`` (two observables) or
``sum_i dA_i^2`` (the four-observable ``fb_bound`` and ``pb_bound``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Sequence

import numpy as np

from .core import (
    NORM_TOL,
    Observable,
    State,
    _check_dims,
    anticommutator_expectation,
    commutator_expectation,
    expectation,
    std,
    variance,
)
from .errors import BadParams, InvalidPerp, MixedStateUnsupported, NotQubit


@dataclass(frozen=True)
class MPConfig:
    """Sign and orthogonal-state choice for the Maccone-Pati ``L1`` term.

    ``sign`` is ``+1``, ``-1`` or ``"auto"`` (keep the larger of the two).
    ``perp`` is ``"auto_max"`` or an explicit ket orthogonal to the state.
    """

    sign: Literal[1, -1, "auto"] = "auto"
    perp: object = "auto_max"

    def __post_init__(self):
        if self.sign not in (1, -1, "auto"):
            raise BadParams(f"sign must be +1, -1 or 'auto', got {self.sign!r}")
        if not (isinstance(self.perp, str) and self.perp == "auto_max"):
            v = np.asarray(self.perp, dtype=complex)
            if v.ndim != 1:
                raise InvalidPerp("explicit perp must be a ket")
            object.__setattr__(self, "perp", v)


def robertson(a: Observable, b: Observable, s: State) -> float:
    return 0.5 * abs(commutator_expectation(a, b, s))


def schrodinger(a: Observable, b: Observable, s: State) -> float:
    """Robertson-Schrodinger lower bound on ``dA * dB``.

    Combines the commutator and the covariance terms in quadrature,
    ``sqrt(|<[A,B]>/2|^2 + |<{A,B}>/2 - <A><B>|^2)``.  Adding the two
    magnitudes linearly instead is not a valid bound: it can exceed
    ``dA * dB`` by up to a factor sqrt(2).
    """
    comm = 0.5 * commutator_expectation(a, b, s)
    cov = 0.5 * anticommutator_expectation(a, b, s) - expectation(a, s) * expectation(b, s)
    return float(np.hypot(comm, cov))


def _require_pure(s: State) -> None:
    if not s.is_pure:
        raise MixedStateUnsupported("Maccone-Pati bounds are defined for pure states only")


def _l1_for_sign(a: Observable, b: Observable, s: State, sign: int, perp) -> float:
    psi = s.ket
    ladder = a.matrix + sign * 1j * b.matrix
    if isinstance(perp, str):
        # maximizer of |<psi|X +- iY|perp>|^2 over unit perp orthogonal to psi
        w = ladder.conj().T @ psi
        w = w - np.vdot(psi, w) * psi
        nrm = np.linalg.norm(w)
        perp_vec = w / nrm if nrm > 1e-14 else np.zeros_like(psi)
    else:
        perp_vec = perp
    term = abs(np.vdot(psi, ladder @ perp_vec)) ** 2
    return sign * commutator_expectation(a, b, s) + term


def mp_l1(a: Observable, b: Observable, s: State, cfg: MPConfig | None = None) -> float:
    cfg = cfg or MPConfig()
    _require_pure(s)
    _check_dims(a.dim, b.dim, s.dim)
    perp = cfg.perp
    if not isinstance(perp, str):
        if perp.shape != s.ket.shape:
            raise InvalidPerp("perp ket has the wrong dimension")
        if abs(np.linalg.norm(perp) - 1.0) > NORM_TOL:
            raise InvalidPerp("perp ket is not normalized")
        if abs(np.vdot(s.ket, perp)) > NORM_TOL:
            raise InvalidPerp("perp ket is not orthogonal to the state")
    signs = (1, -1) if cfg.sign == "auto" else (cfg.sign,)
    return max(_l1_for_sign(a, b, s, sg, perp) for sg in signs)


def mp_l2(a: Observable, b: Observable, s: State) -> float:
    _check_dims(a.dim, b.dim, s.dim)
    return 0.5 * variance(a + b, s)


def mp_bound(a: Observable, b: Observable, s: State, cfg: MPConfig | None = None) -> float:
    return max(mp_l1(a, b, s, cfg), mp_l2(a, b, s))


def qubit_perp(ket: np.ndarray) -> np.ndarray:
    """The (phase-fixed) unique unit ket orthogonal to a qubit ket."""
    return np.array([-np.conj(ket[1]), np.conj(ket[0])])


def qubit_l1_identity_gap(a: Observable, b: Observable, s: State) -> float:
    """``|L1 - (dA^2 + dB^2)|`` using the unique orthogonal qubit state.

    On a qubit the orthogonal complement is one-dimensional, so ``L1`` is
    fully determined and collapses onto the sum of variances.
    """
    _require_pure(s)
    if s.dim != 2:
        raise NotQubit(f"state dimension is {s.dim}")
    l1 = mp_l1(a, b, s, MPConfig(sign="auto", perp=qubit_perp(s.ket)))
    return abs(l1 - (variance(a, s) + variance(b, s)))


def _pair_spreads(obs: Sequence[Observable], s: State) -> tuple[list[float], list[float]]:
    if len(obs) < 3:
        raise BadParams("need at least three observables")
    _check_dims(*(o.dim for o in obs), s.dim)
    pair_vars = [variance(p + q, s) for p, q in combinations(obs, 2)]
    pair_stds = [float(np.sqrt(v)) for v in pair_vars]
    return pair_vars, pair_stds


def fb_bound(obs: Sequence[Observable], s: State) -> float:
    """Pairwise-sum lower bound on ``sum_i dA_i^2`` with a std correction.

    For N observables this is
    ``1/(N-2) * [sum_{i<j} var(A_i+A_j) - (sum_{i<j} std(A_i+A_j))^2 / (N-1)^2]``,
    which for N = 4 gives the prefactors 1/2 and 1/9.  The value is not
    clamped.
    """
    pv, ps = _pair_spreads(obs, s)
    n = len(obs)
    return (sum(pv) - sum(ps) ** 2 / (n - 1) ** 2) / (n - 2)


def pb_bound(obs: Sequence[Observable], s: State) -> float:
    """``sum_{i<j} var(A_i+A_j) / (2(N-1))``; 1/6 for four observables."""
    pv, _ = _pair_spreads(obs, s)
    return sum(pv) / (2 * (len(obs) - 1))


def product_of_stds(a: Observable, b: Observable, s: State) -> float:
    return std(a, s) * std(b, s)
