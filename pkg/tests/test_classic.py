import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uncertainty_bounds.classic import (
    MPConfig,
    fb_bound,
    mp_bound,
    mp_l1,
    mp_l2,
    pb_bound,
    product_of_stds,
    qubit_l1_identity_gap,
    robertson,
    schrodinger,
)
from uncertainty_bounds.core import IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z, make_state, variance
from uncertainty_bounds.errors import InvalidPerp, MixedStateUnsupported, NotQubit
from uncertainty_bounds.experiments.ensemble import random_ket, random_observable
from uncertainty_bounds.experiments.fixtures import fixture_fig1, fixture_fig2

PAULIS_I = [SIGMA_X, SIGMA_Y, SIGMA_Z, IDENTITY_2]


@pytest.fixture
def fig1():
    fx = fixture_fig1()
    return (*fx.observables, fx.state)


class TestProductBounds:
    def test_robertson_paulis(self, ket0):
        assert robertson(SIGMA_X, SIGMA_Y, ket0) == pytest.approx(1.0)

    def test_robertson_self(self, ket_plus):
        assert robertson(SIGMA_X, SIGMA_X, ket_plus) == 0

    def test_schrodinger_paulis(self, ket0):
        assert schrodinger(SIGMA_X, SIGMA_Y, ket0) == pytest.approx(1.0)

    def test_schrodinger_covariance_only(self, ket_plus):
        # <sigma_z^2> - <sigma_z>^2 = 1 - 0 on |+>
        assert schrodinger(SIGMA_Z, SIGMA_Z, ket_plus) == pytest.approx(1.0)

    def test_fixture_values(self, fig1):
        a, b, s = fig1
        # frozen from standalone numpy: |<[A,B]>|/2 and the quadrature combination
        assert robertson(a, b, s) == pytest.approx(2.48633826307557, rel=1e-12)
        assert schrodinger(a, b, s) == pytest.approx(2.802862342412677, rel=1e-12)
        assert schrodinger(a, b, s) >= robertson(a, b, s)


class TestMacconePati:
    def test_l1_qubit_saturates(self, ket0):
        assert mp_l1(SIGMA_X, SIGMA_Y, ket0) == pytest.approx(2.0)

    def test_l1_common_eigenstate(self, ket0):
        assert mp_l1(SIGMA_Z, SIGMA_Z, ket0) == pytest.approx(0.0, abs=1e-12)

    def test_l1_signs_separately(self, ket0):
        assert mp_l1(SIGMA_X, SIGMA_Y, ket0, MPConfig(sign=1)) == pytest.approx(2.0)
        assert mp_l1(SIGMA_X, SIGMA_Y, ket0, MPConfig(sign=-1)) == pytest.approx(2.0)

    def test_l1_fixture_explicit_projection(self, fig1):
        a, b, s = fig1
        psi = s.ket
        best = -np.inf
        for sg in (1, -1):
            w = (a.matrix - sg * 1j * b.matrix) @ psi
            w = w - np.vdot(psi, w) * psi
            perp = w / np.linalg.norm(w)
            comm = 1j * np.vdot(psi, (a.matrix @ b.matrix - b.matrix @ a.matrix) @ psi)
            val = sg * comm.real + abs(np.vdot(psi, (a.matrix + sg * 1j * b.matrix) @ perp)) ** 2
            best = max(best, val)
        assert mp_l1(a, b, s) == pytest.approx(best, rel=1e-12)
        assert mp_l1(a, b, s) <= variance(a, s) + variance(b, s) + 1e-9

    def test_l1_explicit_perp(self, ket0):
        cfg = MPConfig(sign="auto", perp=np.array([0, 1j]))
        assert mp_l1(SIGMA_X, SIGMA_Y, ket0, cfg) == pytest.approx(2.0)

    @pytest.mark.parametrize("perp", [[1, 0], [0, 2], [0, 0, 1]])
    def test_invalid_perp(self, ket0, perp):
        with pytest.raises(InvalidPerp):
            mp_l1(SIGMA_X, SIGMA_Y, ket0, MPConfig(perp=np.array(perp, dtype=complex)))

    def test_mixed_rejected(self, rho_half):
        with pytest.raises(MixedStateUnsupported):
            mp_l1(SIGMA_X, SIGMA_Y, rho_half)

    def test_l2(self, ket0, ket_plus):
        assert mp_l2(SIGMA_X, SIGMA_Y, ket0) == pytest.approx(1.0)
        assert mp_l2(SIGMA_Z, -SIGMA_Z, ket_plus) == 0

    def test_l2_fixture(self, fig1):
        a, b, s = fig1
        assert mp_l2(a, b, s) == pytest.approx(14.934517566704386, rel=1e-12)

    def test_mp_bound(self, ket0, fig1):
        assert mp_bound(SIGMA_X, SIGMA_Y, ket0) == pytest.approx(2.0)
        assert mp_bound(SIGMA_Z, SIGMA_Z, ket0) == pytest.approx(0.0, abs=1e-12)
        a, b, s = fig1
        assert mp_bound(a, b, s) == max(mp_l1(a, b, s), mp_l2(a, b, s))


class TestQubitIdentity:
    def test_examples(self, ket0, ket_plus):
        assert qubit_l1_identity_gap(SIGMA_X, SIGMA_Y, ket0) == pytest.approx(0.0, abs=1e-12)
        assert qubit_l1_identity_gap(SIGMA_X, SIGMA_Z, ket_plus) == pytest.approx(0.0, abs=1e-12)

    def test_not_qubit(self, fig1):
        a, b, s = fig1
        with pytest.raises(NotQubit):
            qubit_l1_identity_gap(a, b, s)

    def test_arbitrary_perp_is_weaker_beyond_qubits(self, rng):
        # in d > 2 the orthogonal complement has room; a random choice is not optimal
        s = random_ket(rng, 4)
        a, b = random_observable(rng, 4), random_observable(rng, 4)
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        v -= np.vdot(s.ket, v) * s.ket
        perp = v / np.linalg.norm(v)
        assert mp_l1(a, b, s, MPConfig(perp=perp)) < variance(a, s) + variance(b, s) - 1e-6


class TestMultiObservable:
    def test_fb_paulis_identity(self, ket0):
        # pair standard deviations (sqrt 2, 1, 1, 1, 1, 0) and variances summing to 6
        expected = 0.5 * (6 - (np.sqrt(2) + 4) ** 2 / 9)
        assert fb_bound(PAULIS_I, ket0) == pytest.approx(expected, rel=1e-12)
        assert fb_bound(PAULIS_I, ket0) == pytest.approx(1.3714, abs=1e-4)

    def test_pb_paulis_identity(self, ket0):
        assert pb_bound(PAULIS_I, ket0) == pytest.approx(1.0)

    def test_common_eigenstate(self, ket0):
        assert fb_bound([SIGMA_Z] * 4, ket0) == pytest.approx(0.0, abs=1e-12)
        assert pb_bound([SIGMA_Z] * 4, ket0) == pytest.approx(0.0, abs=1e-12)

    def test_fig2_fixed_theta(self):
        fx = fixture_fig2()
        s = fx.state_at(np.pi / 2)
        # frozen from a standalone evaluation of the pair sums
        assert fb_bound(fx.observables, s) == pytest.approx(1.3933937249412247, rel=1e-10)
        assert pb_bound(fx.observables, s) == pytest.approx(1.0101886428721336, rel=1e-10)


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=80, deadline=None)
@given(seeds, st.integers(2, 6))
def test_classical_hierarchy(seed, d):
    rng = np.random.default_rng(seed)
    s = random_ket(rng, d)
    a, b = random_observable(rng, d), random_observable(rng, d)
    rob, sch, prod = robertson(a, b, s), schrodinger(a, b, s), product_of_stds(a, b, s)
    assert rob <= sch + 1e-12
    assert sch <= prod + 1e-9 * max(1, prod)
    assert mp_bound(a, b, s) <= variance(a, s) + variance(b, s) + 1e-9


@settings(max_examples=80, deadline=None)
@given(seeds, st.integers(3, 6), st.integers(2, 5))
def test_fb_pb_below_sov(seed, n, d):
    rng = np.random.default_rng(seed)
    s = random_ket(rng, d)
    obs = [random_observable(rng, d) for _ in range(n)]
    sov = sum(variance(o, s) for o in obs)
    assert fb_bound(obs, s) <= sov + 1e-9 * max(1, sov)
    assert pb_bound(obs, s) <= sov + 1e-9 * max(1, sov)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_qubit_identity_random(seed):
    rng = np.random.default_rng(seed)
    s = random_ket(rng, 2)
    assert qubit_l1_identity_gap(random_observable(rng, 2), random_observable(rng, 2), s) <= 1e-10
