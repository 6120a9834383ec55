import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uncertainty_bounds.core import SIGMA_X, SIGMA_Y, SIGMA_Z, combine, deviation_vector
from uncertainty_bounds.errors import (
    BadParams,
    ConstraintViolated,
    DegenerateDecomposition,
    SingularSolve,
)
from uncertainty_bounds.experiments.ensemble import random_density_matrix, random_ket, random_observable
from uncertainty_bounds.experiments.fixtures import (
    FIG1_M,
    FIG1_N,
    FIG1_X,
    FIG1_Y,
    fixture_fig1,
)
from uncertainty_bounds.pair import (
    PairDecomposition,
    WeightPair,
    b_quadratic,
    resolve_decomposition,
    theorem1_bounds,
    verify_sum_identity,
    weighted_sov,
)


@pytest.fixture
def fig1():
    fx = fixture_fig1()
    return (*fx.observables, fx.state, WeightPair(FIG1_X, FIG1_Y))


def test_zero_weights_rejected():
    with pytest.raises(BadParams):
        WeightPair(0, 0)


class TestBQuadratic:
    def test_identity_weight(self, fig1):
        a, b, s, _ = fig1
        assert b_quadratic(1, 0, a, b, s) == pytest.approx(29.06308349423503, rel=1e-12)

    def test_lowering_operator_annihilates(self, ket0):
        assert b_quadratic(1, 1j, SIGMA_X, SIGMA_Y, ket0) == pytest.approx(0.0, abs=1e-12)

    def test_fixture_weights(self, fig1):
        a, b, s, w = fig1
        # frozen from ||x psi_A + y psi_B||^2 with explicit vectors
        assert b_quadratic(w.x, w.y, a, b, s) == pytest.approx(18.271868983183623, rel=1e-12)


class TestResolve:
    def test_direct_substitution(self):
        d = resolve_decomposition(WeightPair(1, 1), 0, 1, 0.3, -2.0)
        assert d.m_t == 1 and d.n_t == -1

    def test_fixture_parameters(self):
        w = WeightPair(FIG1_X, FIG1_Y)
        a, b = 0.5, np.sqrt(0.75)
        d = resolve_decomposition(w, a, b, FIG1_M, FIG1_N)
        assert d.m_t == pytest.approx(-0.4024131376251692 + 1.070984749346756j, rel=1e-12)
        assert d.n_t == pytest.approx(-0.8383125908633366 - 0.5871652237658493j, rel=1e-12)
        assert max(d.residues(w)) < 1e-12

    def test_reverse_variant(self):
        w = WeightPair(FIG1_X, FIG1_Y)
        d = resolve_decomposition(w, 0.6, 0.8, m_t=0.501 + 0.213j, n_t=-1.027 + 0.104j)
        assert max(d.residues(w)) < 1e-12
        assert d.m_t == 0.501 + 0.213j

    def test_singular(self):
        with pytest.raises(SingularSolve):
            resolve_decomposition(WeightPair(1, 1), 0, 0, 1, 1)

    def test_unsatisfiable_without_b(self):
        with pytest.raises(ConstraintViolated):
            resolve_decomposition(WeightPair(1, 1), 1, 0, 0.5, 0.5)

    def test_exactly_one_pair(self):
        with pytest.raises(BadParams):
            resolve_decomposition(WeightPair(1, 1), 1, 1, 1, 1, m_t=1, n_t=1)
        with pytest.raises(BadParams):
            resolve_decomposition(WeightPair(1, 1), 1, 1, 1)


class TestBounds:
    def test_commuting_saturation(self, ket_plus):
        w = WeightPair(1, 1)
        d = resolve_decomposition(w, 0, 1, 0.7, 0.2)
        lo, hi = theorem1_bounds(SIGMA_Z, SIGMA_Z, ket_plus, w, d, allow_degenerate=True)
        assert lo == pytest.approx(2.0) and hi == pytest.approx(2.0)

    def test_a_zero_saturates(self, fig1):
        a, b, s, w = fig1
        d = resolve_decomposition(w, 0, 0.3 - 0.4j, FIG1_M, FIG1_N)
        lo, hi = theorem1_bounds(a, b, s, w, d, allow_degenerate=True)
        sov = weighted_sov(a, b, s, w)
        assert lo == pytest.approx(sov, rel=1e-10)
        assert hi == pytest.approx(sov, rel=1e-10)

    def test_degenerate_needs_flag(self, fig1):
        a, b, s, w = fig1
        d = resolve_decomposition(w, 0, 1, FIG1_M, FIG1_N)
        with pytest.raises(DegenerateDecomposition):
            theorem1_bounds(a, b, s, w, d)

    def test_constraint_checked(self, fig1):
        a, b, s, w = fig1
        bad = PairDecomposition(0.5, 0.5, 1, 1, 1, 1)
        with pytest.raises(ConstraintViolated):
            theorem1_bounds(a, b, s, w, bad)

    def test_fixture_interior_point(self, fig1):
        a, b, s, w = fig1
        d = resolve_decomposition(w, 0.5, np.sqrt(0.75), FIG1_M, FIG1_N)
        lo, hi = theorem1_bounds(a, b, s, w, d)
        # frozen from explicit norms of x psi_A + y psi_B, a psi~_1 and b psi~_2
        assert lo == pytest.approx(10.70777557594792, rel=1e-12)
        assert hi == pytest.approx(47.16822308241272, rel=1e-12)
        assert lo < weighted_sov(a, b, s, w) < hi

    def test_improvable_along_unit_path(self, fig1):
        a, b, s, w = fig1
        sov = weighted_sov(a, b, s, w)

        def gap(abs_a):
            d = resolve_decomposition(w, abs_a, np.sqrt(1 - abs_a**2), FIG1_M, FIG1_N)
            lo, hi = theorem1_bounds(a, b, s, w, d)
            return max(hi - sov, sov - lo)

        assert gap(1e-4) < gap(1e-2) < gap(0.5)
        assert gap(1e-4) < 1e-2


class TestSumIdentity:
    def test_paulis(self, ket0):
        assert verify_sum_identity(SIGMA_X, SIGMA_Y, ket0, WeightPair(1, 1)) <= 1e-12

    def test_fixture(self, fig1):
        a, b, s, w = fig1
        assert verify_sum_identity(a, b, s, w) <= 1e-10 * (1 + 2 * weighted_sov(a, b, s, w))

    def test_common_eigenstate(self, ket0):
        assert verify_sum_identity(SIGMA_Z, SIGMA_Z, ket0, WeightPair(1, 1)) == 0


def test_b_quadratic_equals_direct_norm_1000(rng):
    worst = 0.0
    for i in range(1000):
        d = 2 + i % 7
        s = random_ket(rng, d) if i % 2 else random_density_matrix(rng, d)
        a, b = random_observable(rng, d), random_observable(rng, d)
        al, be = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        direct = combine([al, be], [deviation_vector(a, s), deviation_vector(b, s)]).norm_sq()
        worst = max(worst, abs(b_quadratic(al, be, a, b, s) - direct) / (1 + direct))
    assert worst <= 1e-10


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(2, 8), st.booleans())
def test_sandwich(seed, d, mixed):
    rng = np.random.default_rng(seed)
    s = random_density_matrix(rng, d) if mixed else random_ket(rng, d)
    a, b = random_observable(rng, d), random_observable(rng, d)
    x, y, ac, bc, m, n = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    w = WeightPair(x, y)
    lo, hi = theorem1_bounds(a, b, s, w, resolve_decomposition(w, ac, bc, m, n))
    sov = weighted_sov(a, b, s, w)
    assert lo >= 0
    assert lo <= sov * (1 + 1e-9) + 1e-12
    assert sov <= hi * (1 + 1e-9) + 1e-12


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(2, 8))
def test_nontrivial_near_saturation(seed, d):
    rng = np.random.default_rng(seed)
    s = random_ket(rng, d)
    a, b = random_observable(rng, d), random_observable(rng, d)
    x, y, m, n = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    w = WeightPair(x, y)
    if weighted_sov(a, b, s, w) <= 1e-6:
        return
    dec = resolve_decomposition(w, 1e-3, np.sqrt(1 - 1e-6), m, n)
    lo, _ = theorem1_bounds(a, b, s, w, dec)
    assert lo > 0
