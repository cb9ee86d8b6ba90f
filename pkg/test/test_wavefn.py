# test/test_wavefn.py

import math
import os
import sys

# Ensure project root is on sys.path so top-level packages like `bqho` can be imported
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import eval_hermite

from bqho import core, wavefn
from bqho.core import E1, I1, ONE, ZERO, Hyperbolic
from bqho.errors import InvalidParams, OrderTooLarge
from bqho.oscillator import OscillatorParams
from bqho.wavefn import MsFunction, MsTerm

XI_SETTINGS = [(1.0, 1.0), (1.0, 2.0), (0.5, 3.0)]


def params(xi1=1.0, xi2=1.0, **kwargs):
    return OscillatorParams.from_components(xi1=xi1, xi2=xi2, **kwargs)


# ---- terms and canonical form ----
def test_term_validation():
    with pytest.raises(InvalidParams):
        MsTerm(-1, 1.0, 1.0)
    with pytest.raises(InvalidParams):
        MsTerm(0, 0.0, 1.0)
    with pytest.raises(InvalidParams):
        MsTerm(1.5, 1.0, 1.0)


def test_far_tails_do_not_overflow():
    xs = np.array([-1e32, -5.0, 0.0, 5.0, 1e32])
    values = MsTerm(10, 1.0, 1.0).evaluate(xs)
    assert np.isfinite(values).all()
    assert values[0] == 0.0 and values[-1] == 0.0
    assert values[2] == 0.0
    assert values[3] == pytest.approx(5.0 ** 10 * math.exp(-25.0))
    odd = MsTerm(3, 0.5, 2.0).evaluate(np.array([-1e200, 1e200]))
    assert np.isfinite(odd).all()
    u1, u2 = wavefn.phi_l(10, params(2.0, 0.5)).evaluate(xs)
    assert np.isfinite(u1).all() and np.isfinite(u2).all()
    assert u1[0] == 0.0 and u2[-1] == 0.0


def test_canonicalize_merges_and_drops():
    terms = wavefn.canonicalize(
        [MsTerm(2, 1.0, 1.0), MsTerm(0, 0.5, 3.0), MsTerm(2, 1.0 + 1e-16, 2.0), MsTerm(1, 1.0, 0.0)]
    )
    assert [(t.n, t.alpha, t.c) for t in terms] == [(0, 0.5, 3.0), (2, 1.0, 3.0)]
    assert (MsFunction.symmetric([MsTerm(1, 1.0, 2.0)]) - MsFunction.symmetric([MsTerm(1, 1.0, 2.0)])).comp1 == ()


def test_derivative_of_gaussian():
    du = wavefn.derivative(MsFunction.symmetric([MsTerm(0, 1.0, 1.0)]))
    assert [(t.n, t.c) for t in du.comp1] == [(1, -2.0)]
    xs = np.linspace(-2, 2, 9)
    assert du.evaluate(xs)[0] == pytest.approx(-2 * xs * np.exp(-xs ** 2))


# ---- operators on M_S ----
@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
def test_canonical_commutator_is_term_exact(alpha):
    p = params(1.0, 2.0)
    for n in range(21):
        f = MsFunction.symmetric([MsTerm(n, alpha, 1.0)])
        ccr = wavefn.apply_X(wavefn.apply_P(f, p)) - wavefn.apply_P(wavefn.apply_X(f), p)
        assert (ccr - f.scale(I1 * p.xi * p.hbar)).max_coefficient() < 1e-13


def test_p_acts_with_xi_per_component():
    p = params(1.0, 3.0, hbar=2.0)
    u = wavefn.apply_P(MsFunction.symmetric([MsTerm(1, 1.0, 1.0)]), p)
    # -i hbar xi_k (x^0 - 2 x^2) e^{-x^2}
    assert [(t.n, t.c) for t in u.comp1] == [(0, -2j), (2, 4j)]
    assert [(t.n, t.c) for t in u.comp2] == [(0, -6j), (2, 12j)]


term_strategy = st.builds(
    MsTerm,
    st.integers(min_value=0, max_value=3),
    st.floats(min_value=0.5, max_value=2.0),
    st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
)
ms_functions = st.builds(MsFunction, st.lists(term_strategy, max_size=3), st.lists(term_strategy, max_size=3))


@settings(max_examples=40)
@given(ms_functions, ms_functions)
def test_x_and_p_are_self_adjoint(u, v):
    p = params(1.0, 2.0)
    for op in (wavefn.apply_X, lambda w: wavefn.apply_P(w, p)):
        lhs = wavefn.ms_scalar_product(op(u), v)
        rhs = wavefn.ms_scalar_product(u, op(v))
        assert core.modulus(lhs - rhs) <= 1e-10 * max(1.0, core.modulus(lhs))


# ---- scalar product ----
def test_gaussian_moments():
    assert wavefn.gaussian_moment(0, 1.0) == pytest.approx(math.sqrt(math.pi))
    assert wavefn.gaussian_moment(2, 1.0) == pytest.approx(math.sqrt(math.pi) / 2)
    assert wavefn.gaussian_moment(4, 0.5) == pytest.approx(3 * math.sqrt(2 * math.pi))
    assert wavefn.gaussian_moment(3, 1.0) == 0.0


@pytest.mark.parametrize("xi", XI_SETTINGS)
def test_orthonormality(xi):
    p = params(*xi)
    family = [wavefn.phi_l(l, p) for l in range(11)]
    for l, u in enumerate(family):
        for m, v in enumerate(family):
            target = ONE if l == m else ZERO
            assert core.modulus(wavefn.ms_scalar_product(u, v) - target) < 1e-10


def test_quadrature_oracle_agrees():
    p = params(1.0, 2.0)
    family = [wavefn.phi_l(l, p) for l in (0, 1, 4, 7, 10)]
    for u in family:
        for v in family:
            analytic = wavefn.ms_scalar_product(u, v)
            assert core.modulus(wavefn.ms_quadrature_product(u, v) - analytic) < 1e-9


# ---- Hermite ----
def test_hermite_coefficients():
    assert wavefn.hermite_coeffs(0).coeffs == (1,)
    assert wavefn.hermite_coeffs(1).coeffs == (0, 2)
    assert wavefn.hermite_coeffs(3).coeffs == (0, -12, 0, 8)
    assert wavefn.hermite_coeffs(60).coeffs[-1] == 2 ** 60
    top = wavefn.hermite_coeffs(60).coeffs
    assert all(isinstance(c, int) for c in top)
    assert top[0] == math.factorial(60) // math.factorial(30)
    with pytest.raises(OrderTooLarge):
        wavefn.hermite_coeffs(61)
    with pytest.raises(ValueError):
        wavefn.hermite_coeffs(-1)


def test_hermite_hyperbolic_eval():
    assert wavefn.hermite_hyperbolic_eval(2, Hyperbolic(1.0, 1.0)) == Hyperbolic(2.0, 2.0)
    assert wavefn.hermite_hyperbolic_eval(0, Hyperbolic(0.3, -7.0)) == Hyperbolic(1.0, 1.0)
    value = wavefn.hermite_hyperbolic_eval(3, Hyperbolic(0.5, 1.5))
    assert (value.x1, value.x2) == pytest.approx((eval_hermite(3, 0.5), eval_hermite(3, 1.5)))


@pytest.mark.parametrize("l", [0, 1, 2, 5, 12, 20])
def test_hermite_matches_real_hermite(l):
    for t in np.linspace(-3, 3, 13):
        scale = sum(abs(c) * abs(t) ** n for n, c in enumerate(wavefn.hermite_coeffs(l).coeffs))
        value = wavefn.hermite_hyperbolic_eval(l, Hyperbolic(t, t))
        assert abs(value.x1 - eval_hermite(l, t)) <= 1e-12 * max(1.0, scale)
        assert value.x1 == value.x2


def test_poly_eval_matches_hermite():
    theta = Hyperbolic(0.7, -1.2)
    via_poly = core.poly_eval(wavefn.hermite_coeffs(2).coeffs, theta)
    direct = wavefn.hermite_hyperbolic_eval(2, theta)
    assert core.modulus(via_poly - direct.to_bicomplex()) < 1e-14


# ---- eigenfunctions ----
def test_ground_state_at_origin():
    u = wavefn.phi_l(0, params())
    assert core.modulus(u.value_at(0.0) - ONE * math.pi ** -0.25) < 1e-15
    value = wavefn.phi_l_pointwise(0, params(), 0.0)
    assert (value.x1, value.x2) == pytest.approx((math.pi ** -0.25, math.pi ** -0.25))


@pytest.mark.parametrize("xi", XI_SETTINGS)
def test_hamiltonian_residual(xi):
    p = params(*xi)
    for l in range(11):
        assert wavefn.hamiltonian_residual(l, p) < 1e-10
        shifted = p.energy(l, l) + p.xi * p.quantum
        assert wavefn.hamiltonian_residual(l, p, energy=shifted) > 1e-2


def test_pointwise_formula_matches_components():
    p = params(1.0, 2.0, m=2.0)
    for l in (0, 3, 7):
        u = wavefn.phi_l(l, p)
        for x in np.linspace(-3, 3, 25):
            direct = wavefn.phi_l_pointwise(l, p, float(x))
            u1, u2 = u.evaluate(x)
            s1 = wavefn.standard_phi(l, p.m, p.omega, p.hbar * 1.0, float(x))
            s2 = wavefn.standard_phi(l, p.m, p.omega, p.hbar * 2.0, float(x))
            assert direct.x1 == pytest.approx(s1, abs=1e-12)
            assert direct.x2 == pytest.approx(s2, abs=1e-12)
            assert complex(u1) == pytest.approx(s1, abs=1e-12)
            assert complex(u2) == pytest.approx(s2, abs=1e-12)


def test_parity():
    p = params(1.0, 2.0)
    xs = np.linspace(0.1, 3.0, 12)
    for l in range(6):
        u = wavefn.phi_mixed(l, l, 1, 1, p)
        for plus, minus in zip(u.evaluate(xs), u.evaluate(-xs)):
            assert np.array_equal(minus, (-1) ** l * plus)


def test_mixed_eigenfunctions():
    p = params(1.0, 2.0)
    a = wavefn.phi_mixed(1, 2, 1, 1, p)
    b = wavefn.phi_mixed(1, 3, 1, 1, p)
    assert core.modulus(wavefn.ms_scalar_product(a, b) - E1) < 1e-12
    null = wavefn.phi_mixed(3, 0, 0, 1, p)
    assert null.comp1 == ()
    assert core.is_null_cone(wavefn.ms_scalar_product(null, null))


def test_unit_j_form():
    p = params(1.0, 2.0)
    u = wavefn.phi_mixed(0, 1, 1, 1j, p)
    xs = np.array([-0.5, 0.0, 1.0])
    real_part, j_part = wavefn.to_unit_j_form(u, xs)
    u1, u2 = u.evaluate(xs)
    assert real_part + j_part == pytest.approx(u1)
    assert real_part - j_part == pytest.approx(u2)


# ---- export ----
def test_sample_table_columns():
    u = wavefn.phi_mixed(0, 0, 0, 1, params())
    frame = wavefn.sample_table(u, [-1.0, 0.0, 1.0])
    assert list(frame.columns) == ["x", "u1_re", "u1_im", "u2_re", "u2_im"]
    assert (frame["u1_re"] == 0).all() and (frame["u1_im"] == 0).all()
    wide = wavefn.sample_table(u, [0.0], unit_j=True)
    assert list(wide.columns)[-4:] == ["real_re", "real_im", "j_re", "j_im"]
