"""Bounds for N observables and pairwise-matching composites.

The N-observable bounds bracket ``sum_i |x_i|^2 dA_i^2`` by

    Bt_pm = 1/N [ Bt^2 + sum_k (|a_k| B(m_k, n_k) +- |b_k| B(mt_k, nt_k))^2 ]

with ``Bt^2 = ||sum_i x_i psi_i||^2`` and one two-observable decomposition
per pair ``k <-> (i, j)``, ``i < j``.  Pairs are ordered lexicographically.

Matching composites instead split the observables into disjoint pairs, apply
the two-observable lower bound to each pair and sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence, Union

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
    BadIndices,
    BadParams,
    DegenerateDecomposition,
    LengthMismatch,
    NegativeNormSquare,
    OddCount,
)
from .pair import (
    NEG_NORM_TOL,
    PairDecomposition,
    WeightPair,
    b_norm,
    resolve_decomposition,
    theorem1_bounds,
)


@dataclass(frozen=True)
class WeightVector:
    x: tuple[complex, ...]

    def __post_init__(self):
        x = tuple(complex(v) for v in self.x)
        if len(x) < 2:
            raise BadParams("need at least two weights")
        if all(v == 0 for v in x):
            raise BadParams("weights are all zero")
        object.__setattr__(self, "x", x)

    def __len__(self) -> int:
        return len(self.x)

    @classmethod
    def ones(cls, n: int) -> WeightVector:
        return cls((1.0,) * n)

    def pair(self, i: int, j: int) -> WeightPair:
        return WeightPair(self.x[i], self.x[j])


def pair_list(n: int) -> list[tuple[int, int]]:
    """Zero-based pairs ``(i, j)``, ``i < j``, in lexicographic order."""
    return list(combinations(range(n), 2))


def pair_index(i: int, j: int, n: int) -> int:
    """One-based rank ``k`` of the one-based pair ``(i, j)``.

    >>> pair_index(2, 4, 4)
    5
    """
    if not (1 <= i < j <= n):
        raise BadIndices(f"need 1 <= i < j <= N, got ({i}, {j}, {n})")
    # pairs starting with 1..i-1 come first
    before = (i - 1) * n - (i - 1) * i // 2
    return before + (j - i)


@dataclass(frozen=True)
class MultiDecomposition:
    pairs: tuple[PairDecomposition, ...]

    def check(self, w: WeightVector) -> None:
        n = len(w)
        if len(self.pairs) != n * (n - 1) // 2:
            raise LengthMismatch(f"{len(self.pairs)} pair decompositions for N = {n}")
        for d, (i, j) in zip(self.pairs, pair_list(n)):
            d.check(w.pair(i, j))

    @property
    def is_degenerate(self) -> bool:
        sa = sum(abs(d.a) ** 2 for d in self.pairs)
        sb = sum(abs(d.b) ** 2 for d in self.pairs)
        return sa * sb == 0

    def residues(self, w: WeightVector) -> list[tuple[float, float]]:
        return [d.residues(w.pair(i, j)) for d, (i, j) in zip(self.pairs, pair_list(len(w)))]


def _broadcast(v, k: int, name: str) -> list:
    if v is None:
        return [None] * k
    if np.ndim(v) == 0:
        return [v] * k
    v = list(v)
    if len(v) != k:
        raise LengthMismatch(f"{name} has {len(v)} entries, expected {k}")
    return v


def resolve_multi(
    w: WeightVector,
    a,
    b,
    m=None,
    n=None,
    *,
    m_t=None,
    n_t=None,
) -> MultiDecomposition:
    """Per-pair ``resolve_decomposition``; scalars are broadcast over all pairs."""
    pairs = pair_list(len(w))
    k = len(pairs)
    cols = [_broadcast(v, k, name) for v, name in
            ((a, "a"), (b, "b"), (m, "m"), (n, "n"), (m_t, "m_t"), (n_t, "n_t"))]
    out = []
    for (i, j), (ak, bk, mk, nk, mtk, ntk) in zip(pairs, zip(*cols)):
        out.append(resolve_decomposition(w.pair(i, j), ak, bk, mk, nk, m_t=mtk, n_t=ntk))
    return MultiDecomposition(tuple(out))


def _check_obs(obs: Sequence[Observable], s: State, w: WeightVector | None = None) -> None:
    if len(obs) < 2:
        raise BadParams("need at least two observables")
    if w is not None and len(w) != len(obs):
        raise LengthMismatch(f"{len(w)} weights for {len(obs)} observables")
    _check_dims(*(o.dim for o in obs), s.dim)


def b_tilde_sq(w: WeightVector, obs: Sequence[Observable], s: State) -> float:
    """``||sum_i x_i psi_i||^2`` from variances and pairwise commutators."""
    _check_obs(obs, s, w)
    xr = [v.real for v in w.x]
    xi = [v.imag for v in w.x]
    re_part = Observable(sum(c * o.matrix for c, o in zip(xr, obs)))
    im_part = Observable(sum(c * o.matrix for c, o in zip(xi, obs)))
    val = variance(re_part, s) + variance(im_part, s)
    for j, l in pair_list(len(obs)):
        coeff = xr[j] * xi[l] - xi[j] * xr[l]
        if coeff != 0:
            val += coeff * commutator_expectation(obs[j], obs[l], s)
    scale = 1.0 + sum(abs(v) ** 2 for v in w.x) * sum(variance(o, s) for o in obs)
    if val < -NEG_NORM_TOL * scale:
        raise NegativeNormSquare(f"squared norm evaluated to {val!r}")
    return max(val, 0.0)


def weighted_sov(obs: Sequence[Observable], s: State, w: WeightVector | None = None) -> float:
    w = w or WeightVector.ones(len(obs))
    return sum(abs(x) ** 2 * variance(o, s) for x, o in zip(w.x, obs))


def theorem2_bounds(
    obs: Sequence[Observable],
    s: State,
    w: WeightVector,
    d: MultiDecomposition,
    *,
    allow_degenerate: bool = False,
) -> tuple[float, float]:
    """Return ``(lower, upper)`` bracketing ``sum_i |x_i|^2 dA_i^2``."""
    _check_obs(obs, s, w)
    d.check(w)
    if d.is_degenerate and not allow_degenerate:
        raise DegenerateDecomposition("all a_k or all b_k vanish")
    n = len(obs)
    head = b_tilde_sq(w, obs, s)
    lo_sum = hi_sum = 0.0
    for dk, (i, j) in zip(d.pairs, pair_list(n)):
        t1 = abs(dk.a) * b_norm(dk.m, dk.n, obs[i], obs[j], s)
        t2 = abs(dk.b) * b_norm(dk.m_t, dk.n_t, obs[i], obs[j], s)
        lo_sum += (t1 - t2) ** 2
        hi_sum += (t1 + t2) ** 2
    return (head + lo_sum) / n, (head + hi_sum) / n


def verify_multi_identity(obs: Sequence[Observable], s: State, w: WeightVector) -> float:
    """Residual of ``||sum x_i psi_i||^2 + sum_k ||x_i psi_i - x_j psi_j||^2 = N sum ||x_i psi_i||^2``."""
    _check_obs(obs, s, w)
    vecs = [deviation_vector(o, s) for o in obs]
    n = len(obs)
    lhs = combine(w.x, vecs).norm_sq()
    for i, j in pair_list(n):
        lhs += combine([w.x[i], -w.x[j]], [vecs[i], vecs[j]]).norm_sq()
    rhs = n * sum(abs(x) ** 2 * v.norm_sq() for x, v in zip(w.x, vecs))
    return abs(lhs - rhs)


@dataclass(frozen=True)
class Matching:
    """Partition of observable indices (zero-based) into disjoint pairs."""

    groups: tuple[tuple[int, int], ...]

    def __post_init__(self):
        groups = tuple(tuple(sorted(g)) for g in self.groups)
        flat = [i for g in groups for i in g]
        if any(len(g) != 2 for g in groups):
            raise BadParams("every group must be a pair")
        if len(set(flat)) != len(flat) or sorted(flat) != list(range(len(flat))):
            raise BadParams(f"groups {groups} do not partition 0..{len(flat) - 1}")
        object.__setattr__(self, "groups", groups)


def all_matchings(n: int) -> list[Matching]:
    """Every perfect matching of ``n`` indices (n even), in canonical order."""
    if n % 2:
        raise OddCount(f"cannot pair {n} observables")

    def rec(rest):
        if not rest:
            yield ()
            return
        first = rest[0]
        for k in range(1, len(rest)):
            for tail in rec(rest[1:k] + rest[k + 1:]):
                yield ((first, rest[k]),) + tail

    return [Matching(g) for g in rec(tuple(range(n)))]


@dataclass(frozen=True)
class PairCase:
    """One parameter assignment for a pair; give ``(m, n)`` or ``(m_t, n_t)``."""

    a: complex
    b: complex
    m: complex | None = None
    n: complex | None = None
    m_t: complex | None = None
    n_t: complex | None = None

    def resolve(self, w: WeightPair) -> PairDecomposition:
        return resolve_decomposition(w, self.a, self.b, self.m, self.n, m_t=self.m_t, n_t=self.n_t)


PairParams = Union[PairCase, Mapping[tuple[int, int], PairCase]]


def _case_for(params: PairParams, pair: tuple[int, int]) -> PairCase:
    if isinstance(params, PairCase):
        return params
    return params[pair]


def matching_bound(
    obs: Sequence[Observable],
    s: State,
    matching: Matching,
    per_pair_params: PairParams,
    w: WeightVector | None = None,
    *,
    allow_degenerate: bool = False,
) -> float:
    """Sum of two-observable lower bounds over the pairs of ``matching``."""
    if len(obs) % 2:
        raise OddCount(f"cannot pair {len(obs)} observables")
    w = w or WeightVector.ones(len(obs))
    _check_obs(obs, s, w)
    if len(matching.groups) * 2 != len(obs):
        raise LengthMismatch("matching does not cover every observable")
    total = 0.0
    for i, j in matching.groups:
        pw = w.pair(i, j)
        d = _case_for(per_pair_params, (i, j)).resolve(pw)
        lower, _ = theorem1_bounds(obs[i], obs[j], s, pw, d, allow_degenerate=allow_degenerate)
        total += lower
    return total


def composite_bound(
    obs: Sequence[Observable],
    s: State,
    matchings: Sequence[Matching],
    per_pair_params: PairParams | Sequence[PairParams],
    w: WeightVector | None = None,
    *,
    allow_degenerate: bool = False,
) -> tuple[float, float]:
    """Return ``(tb_max, tb_avg)`` over ``matchings``.

    ``per_pair_params`` may be a list of alternative parameter cases; each
    statistic is then the largest value any case attains.
    """
    if not matchings:
        raise BadParams("need at least one matching")
    if isinstance(per_pair_params, (PairCase, Mapping)):
        cases = [per_pair_params]
    else:
        cases = list(per_pair_params)
    best_max = best_avg = -np.inf
    for case in cases:
        vals = [matching_bound(obs, s, mt, case, w, allow_degenerate=allow_degenerate)
                for mt in matchings]
        best_max = max(best_max, max(vals))
        best_avg = max(best_avg, sum(vals) / len(vals))
    return float(best_max), float(best_avg)
