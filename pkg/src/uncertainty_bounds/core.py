"""States, observables and deviation vectors.

Every bound in the package is assembled from the same few ingredients: the
expectation of an observable, its variance, and the deviation vector
``(A - <A>)|psi>`` whose squared norm is that variance.  Mixed states are
handled by replacing the ket with the PSD square root of the density matrix,
in which case deviation vectors are matrices and the inner product is the
Hilbert-Schmidt one, ``Tr(P^dagger Q)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from .errors import (
    BadDimension,
    DimensionMismatch,
    EmptyInput,
    KindMismatch,
    NonImaginaryCommutator,
    NonRealExpectation,
    NotDensityMatrix,
    NotHermitian,
    NotNormalized,
)

HERMITIAN_TOL = 1e-10
NORM_TOL = 1e-10
EIG_CLAMP = 1e-10
SQRT_CHECK_TOL = 1e-8
IMAG_TOL = 1e-9
NEG_CLAMP = 1e-12


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Observable:
    """A validated Hermitian matrix.

    Real linear combinations of observables are observables again, so
    ``A + B``, ``-A`` and ``2.0 * A`` are supported.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise BadDimension(f"observable must be a square matrix, got shape {m.shape}")
        if m.shape[0] < 2:
            raise BadDimension("observable dimension must be at least 2")
        m = np.asarray(m, dtype=complex)
        scale = 1.0 + np.max(np.abs(m))
        if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL * scale:
            raise NotHermitian("matrix differs from its conjugate transpose")
        object.__setattr__(self, "matrix", _frozen(m))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __add__(self, other: Observable) -> Observable:
        if not isinstance(other, Observable):
            return NotImplemented
        _check_dims(self.dim, other.dim)
        return Observable(self.matrix + other.matrix)

    def __sub__(self, other: Observable) -> Observable:
        if not isinstance(other, Observable):
            return NotImplemented
        _check_dims(self.dim, other.dim)
        return Observable(self.matrix - other.matrix)

    def __neg__(self) -> Observable:
        return Observable(-self.matrix)

    def __mul__(self, c: float) -> Observable:
        if isinstance(c, complex) or np.iscomplexobj(c):
            raise TypeError("observables may only be scaled by real numbers")
        return Observable(float(c) * self.matrix)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Observable(dim={self.dim})"


@dataclass(frozen=True, eq=False)
class State:
    """A pure ket or a density matrix with its cached square root."""

    kind: Literal["pure", "mixed"]
    ket: np.ndarray | None = None
    rho: np.ndarray | None = None
    sqrt_rho: np.ndarray | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.ket.shape[0] if self.kind == "pure" else self.rho.shape[0]

    @property
    def is_pure(self) -> bool:
        return self.kind == "pure"

    def density_matrix(self) -> np.ndarray:
        if self.kind == "mixed":
            return self.rho
        return np.outer(self.ket, self.ket.conj())

    def __repr__(self) -> str:
        return f"State(kind={self.kind!r}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class DeviationVector:
    """Element of the working Hilbert space: a ket or a d x d matrix."""

    kind: Literal["ket", "matrix"]
    data: np.ndarray

    def inner(self, other: DeviationVector) -> complex:
        """``<self|other>``, antilinear in ``self``."""
        _check_same_space(self, other)
        return complex(np.vdot(self.data, other.data))

    def norm_sq(self) -> float:
        v = float(np.vdot(self.data, self.data).real)
        return 0.0 if v < NEG_CLAMP else v

    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq()))


def _check_dims(*dims: int) -> None:
    if len(set(dims)) > 1:
        raise DimensionMismatch(f"dimensions differ: {dims}")


def _check_same_space(u: DeviationVector, v: DeviationVector) -> None:
    if u.kind != v.kind:
        raise KindMismatch(f"cannot mix {u.kind} and {v.kind} deviation vectors")
    if u.data.shape != v.data.shape:
        raise DimensionMismatch(f"shapes differ: {u.data.shape} vs {v.data.shape}")


def make_observable(matrix) -> Observable:
    return Observable(np.asarray(matrix))


def make_state(ket=None, rho=None) -> State:
    """Build a pure state from ``ket`` or a mixed state from ``rho``.

    For the mixed case the PSD square root is computed once, from the
    Hermitian eigendecomposition with eigenvalues in ``[-1e-10, 0)`` clamped
    to zero.
    """
    if (ket is None) == (rho is None):
        raise ValueError("pass exactly one of ket or rho")
    if ket is not None:
        v = np.asarray(ket, dtype=complex)
        if v.ndim != 1 or v.shape[0] < 2:
            raise BadDimension(f"ket must be a vector of length >= 2, got shape {v.shape}")
        if abs(np.linalg.norm(v) - 1.0) > NORM_TOL:
            raise NotNormalized(f"ket norm is {np.linalg.norm(v)!r}")
        return State("pure", ket=_frozen(v))

    r = np.asarray(rho, dtype=complex)
    if r.ndim != 2 or r.shape[0] != r.shape[1] or r.shape[0] < 2:
        raise BadDimension(f"density matrix must be square with d >= 2, got shape {r.shape}")
    if np.max(np.abs(r - r.conj().T)) > HERMITIAN_TOL * (1.0 + np.max(np.abs(r))):
        raise NotDensityMatrix("density matrix is not Hermitian")
    if abs(np.trace(r).real - 1.0) > NORM_TOL:
        raise NotDensityMatrix(f"trace is {np.trace(r).real!r}, expected 1")
    r = 0.5 * (r + r.conj().T)
    w, u = np.linalg.eigh(r)
    if w.min() < -EIG_CLAMP:
        raise NotDensityMatrix(f"negative eigenvalue {w.min()!r}")
    w = np.clip(w, 0.0, None)
    root = (u * np.sqrt(w)) @ u.conj().T
    if np.linalg.norm(root @ root - r) > SQRT_CHECK_TOL:
        raise NotDensityMatrix("square root does not reproduce the density matrix")
    return State("mixed", rho=_frozen(r), sqrt_rho=_frozen(root))


def pure_to_mixed(s: State) -> State:
    """Lift a pure state to its projector ``|psi><psi|``."""
    if not s.is_pure:
        return s
    return make_state(rho=s.density_matrix())


def _raw_mean(m: np.ndarray, s: State) -> complex:
    if s.is_pure:
        return complex(np.vdot(s.ket, m @ s.ket))
    return complex(np.trace(s.rho @ m))


def _real_mean(m: np.ndarray, s: State) -> float:
    z = _raw_mean(m, s)
    if abs(z.imag) > IMAG_TOL * (1.0 + abs(z.real)):
        raise NonRealExpectation(f"expectation has imaginary part {z.imag!r}")
    return z.real


def expectation(a: Observable, s: State) -> float:
    _check_dims(a.dim, s.dim)
    return _real_mean(a.matrix, s)


def variance(a: Observable, s: State) -> float:
    _check_dims(a.dim, s.dim)
    mean = _real_mean(a.matrix, s)
    v = _real_mean(a.matrix @ a.matrix, s) - mean * mean
    return max(v, 0.0)


def std(a: Observable, s: State) -> float:
    return float(np.sqrt(variance(a, s)))


def deviation_vector(a: Observable, s: State) -> DeviationVector:
    _check_dims(a.dim, s.dim)
    shifted = a.matrix - expectation(a, s) * np.eye(a.dim)
    if s.is_pure:
        return DeviationVector("ket", _frozen(shifted @ s.ket))
    return DeviationVector("matrix", _frozen(shifted @ s.sqrt_rho))


def combine(coeffs: Sequence[complex], vectors: Sequence[DeviationVector]) -> DeviationVector:
    """Linear superposition ``sum_i coeffs[i] * vectors[i]``."""
    if len(vectors) == 0:
        raise EmptyInput("nothing to combine")
    if len(coeffs) != len(vectors):
        raise DimensionMismatch(f"{len(coeffs)} coefficients for {len(vectors)} vectors")
    first = vectors[0]
    for v in vectors[1:]:
        _check_same_space(first, v)
    out = np.zeros_like(first.data)
    for c, v in zip(coeffs, vectors):
        out = out + complex(c) * v.data
    return DeviationVector(first.kind, _frozen(out))


def commutator_expectation(a: Observable, b: Observable, s: State) -> float:
    """Return ``i <[A, B]>``, which is real for Hermitian ``A`` and ``B``."""
    _check_dims(a.dim, b.dim, s.dim)
    z = 1j * (_raw_mean(a.matrix @ b.matrix, s) - _raw_mean(b.matrix @ a.matrix, s))
    scale = 1.0 + np.linalg.norm(a.matrix) * np.linalg.norm(b.matrix)
    if abs(z.imag) > IMAG_TOL * scale:
        raise NonImaginaryCommutator(f"<[A,B]> has real part {-z.imag!r}")
    return z.real


def anticommutator_expectation(a: Observable, b: Observable, s: State) -> float:
    """Return ``<{A, B}>``."""
    _check_dims(a.dim, b.dim, s.dim)
    return _real_mean(a.matrix @ b.matrix + b.matrix @ a.matrix, s)


# Pauli matrices, used throughout tests, fixtures and examples.
SIGMA_X = Observable(np.array([[0, 1], [1, 0]]))
SIGMA_Y = Observable(np.array([[0, -1j], [1j, 0]]))
SIGMA_Z = Observable(np.array([[1, 0], [0, -1]]))
IDENTITY_2 = Observable(np.eye(2))
