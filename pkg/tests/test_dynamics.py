import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bimodal_jc.dynamics import evolve, special_state_t_mpi, trapped_state
from bimodal_jc.model import ModelParams, tms_coefficients

from conftest import make


def test_initial_condition():
    p, c = make(theta=1.1, phi=0.4, eta=0.05)
    t = evolve(p, c, 0.0)
    np.testing.assert_allclose(t.f1, c.c * np.cos(0.55), atol=1e-15)
    np.testing.assert_allclose(t.f2, c.c * np.exp(0.4j) * np.sin(0.55), atol=1e-15)


def test_excited_atom_at_pi_is_revival():
    p, c = make()
    t = evolve(p, c, np.pi)
    n = np.arange(len(c.c))
    np.testing.assert_allclose(t.f1, (-1.0) ** (n + 1) * c.c, atol=1e-12)
    np.testing.assert_allclose(t.f2, 0, atol=1e-12)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
@pytest.mark.parametrize("theta,phi", [(0.0, 0.0), (1.0, 2.5), (np.pi, 0.3)])
def test_special_state_matches_evolve(m, theta, phi):
    p, c = make(theta=theta, phi=phi)
    a = evolve(p, c, m * np.pi)
    s = special_state_t_mpi(p, c, m)
    np.testing.assert_allclose(a.f1, s.f1, atol=1e-10)
    np.testing.assert_allclose(a.f2, s.f2, atol=1e-10)


def test_special_state_m0_and_product_form():
    p, c = make(theta=0.9, phi=0.2)
    s0, init = special_state_t_mpi(p, c, 0), evolve(p, c, 0.0)
    np.testing.assert_allclose(s0.f1, init.f1)
    np.testing.assert_allclose(s0.f2, init.f2)
    p, c = make()
    s1 = special_state_t_mpi(p, c, 1)
    assert np.all(s1.f2 == 0)
    np.testing.assert_allclose(np.abs(s1.f1), c.c)


def test_special_state_rejects_kerr():
    p, c = make(eta=0.03)
    with pytest.raises(ValueError):
        special_state_t_mpi(p, c, 1)


@pytest.mark.parametrize("t", [0.0, 0.3, 1.7, 2.9])
def test_trapped_state_matches_evolve(t):
    p, c = make(theta=np.pi / 2)
    tr = trapped_state(p, c, t)
    a = evolve(p, c, t)
    np.testing.assert_allclose(np.abs(tr.f1), c.c / np.sqrt(2), atol=1e-15)
    np.testing.assert_allclose(np.abs(tr.f2), c.c / np.sqrt(2), atol=1e-15)
    np.testing.assert_allclose(a.f1, tr.f1, atol=1e-10)
    np.testing.assert_allclose(a.f2, tr.f2, atol=1e-10)


def test_trapped_state_rejects_other_params():
    p, c = make(theta=np.pi / 2, phi=0.1)
    with pytest.raises(ValueError):
        trapped_state(p, c, 0.5)


params_st = st.builds(
    lambda r, th, ph, eta: ModelParams(r=r, theta=th, phi=ph, eta=eta),
    st.floats(0.0, 2.0), st.floats(0.0, np.pi), st.floats(0.0, 2 * np.pi), st.floats(0.0, 0.2),
)


@settings(max_examples=50)
@given(params_st, st.floats(0.0, 2 * np.pi))
def test_unitarity(p, t):
    c = tms_coefficients(p)
    norm = evolve(p, c, t).norm
    assert 1 - p.tail_tol - 1e-12 <= norm <= 1 + 1e-12
    assert norm == pytest.approx(c.norm, abs=1e-13)


def test_unitarity_dense_grid():
    p, c = make(theta=0.7, phi=1.3, eta=0.03)
    norms = [evolve(p, c, t).norm for t in np.linspace(0, 2 * np.pi, 400)]
    assert np.all(np.abs(np.array(norms) - 1) <= p.tail_tol + 1e-12)


@settings(max_examples=30)
@given(st.floats(0.0, np.pi), st.floats(0.0, 2 * np.pi), st.floats(0.0, 10.0))
def test_period_pi_without_kerr(theta, phi, t):
    p, c = make(theta=theta, phi=phi, sinh2r=2.0)
    a, b = evolve(p, c, t), evolve(p, c, t + np.pi)
    np.testing.assert_allclose(np.abs(a.f1), np.abs(b.f1), atol=1e-10)
    np.testing.assert_allclose(np.abs(a.f2), np.abs(b.f2), atol=1e-10)


@pytest.mark.parametrize("mp", [1, 3, 5])
def test_half_period_parity_split(mp):
    # excited atom: up-level support moves from all n to odd n only,
    # down-level support (on |n+1,n+1>) sits on even n, so both live on odd |k,k>
    p, c = make()
    t = evolve(p, c, mp * np.pi / 2)
    n = np.arange(len(c.c))
    np.testing.assert_allclose(t.f1[n % 2 == 0], 0, atol=1e-12)
    np.testing.assert_allclose(t.f2[n % 2 == 1], 0, atol=1e-12)
    assert np.all(np.abs(t.f1[n % 2 == 1]) > 0)
