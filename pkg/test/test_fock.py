# test/test_fock.py

import math
import os
import sys

# Ensure project root is on sys.path so top-level packages like `bqho` can be imported
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bqho import core, fock
from bqho.core import E1, E2, I1, J, ONE, ZERO, BiComplex
from bqho.errors import DimensionMismatch, IndexOutOfRange
from bqho.fock import BiOperator, Ket

DIM = 6

parts = st.floats(min_value=-5, max_value=5, allow_nan=False, allow_infinity=False)
scalars = st.builds(BiComplex, parts, parts, parts, parts)
kets = st.lists(scalars, min_size=DIM, max_size=DIM).map(Ket.from_coords)


def random_operator(rng, dim=DIM):
    shape = (dim, dim)
    return BiOperator(
        rng.normal(size=shape) + 1j * rng.normal(size=shape),
        rng.normal(size=shape) + 1j * rng.normal(size=shape),
    )


def random_ket(rng, dim=DIM):
    return Ket(rng.normal(size=dim) + 1j * rng.normal(size=dim), rng.normal(size=dim) + 1j * rng.normal(size=dim))


def small(w, scale=1.0, eps=1e-12):
    return core.modulus(w) <= eps * max(1.0, scale)


# ---- kets ----
def test_basis_and_coordinates():
    phi2 = Ket.basis(2, DIM)
    assert phi2.coord(2) == ONE
    assert phi2.coord(0) == ZERO
    with pytest.raises(IndexOutOfRange):
        Ket.basis(DIM, DIM)
    psi = Ket.from_coords([E1, I1, 2.0])
    assert psi.dim == 3
    assert psi.coords == [E1, I1, BiComplex(2.0)]


def test_ket_module_operations():
    psi = Ket.basis(0, DIM) * E1 + Ket.basis(1, DIM) * E2
    assert (psi - psi).is_zero()
    assert (-psi + psi).is_zero()
    assert (2 * psi).coord(0) == E1 * 2
    with pytest.raises(DimensionMismatch):
        psi + Ket.basis(0, DIM + 1)


def test_kets_are_immutable():
    psi = Ket.basis(0, DIM)
    with pytest.raises(ValueError):
        psi.c1[0] = 5.0


# ---- scalar product ----
@settings(max_examples=50)
@given(kets, kets, kets, scalars)
def test_scalar_product_axioms(psi, phi, chi, w):
    sp = fock.scalar_product
    scale = (fock.ket_norm(psi) + 1) * (fock.ket_norm(phi) + fock.ket_norm(chi) + 1) * (core.modulus(w) + 1)
    assert small(sp(psi, phi + chi) - sp(psi, phi) - sp(psi, chi), scale)
    assert small(sp(psi, phi * w) - w * sp(psi, phi), scale)
    assert small(sp(psi * w, phi) - core.conj_dagger(w) * sp(psi, phi), scale)
    assert small(sp(psi, phi) - core.conj_dagger(sp(phi, psi)), scale)
    assert core.in_d_plus(sp(psi, psi))


def test_scalar_product_of_zero_and_basis():
    assert fock.scalar_product(Ket.zeros(DIM), Ket.zeros(DIM)) == ZERO
    assert fock.scalar_product(Ket.basis(1, DIM), Ket.basis(1, DIM)) == ONE
    assert fock.scalar_product(Ket.basis(1, DIM), Ket.basis(2, DIM)) == ZERO
    with pytest.raises(DimensionMismatch):
        fock.scalar_product(Ket.basis(0, DIM), Ket.basis(0, DIM + 1))


def test_coordinates_are_recovered_by_scalar_product():
    coords = [E1 * 3, I1, ONE + E2, ZERO, BiComplex(1, 2, 3, 4), E2]
    psi = Ket.from_coords(coords)
    for m, w in enumerate(coords):
        assert small(fock.scalar_product(Ket.basis(m, DIM), psi) - w, 10, 1e-14)


def test_idempotent_separation():
    rng = np.random.default_rng(7)
    psi, phi = random_ket(rng), random_ket(rng)
    whole = fock.scalar_product(psi, phi)
    split = E1 * fock.scalar_product(fock.project(psi, 1), fock.project(phi, 1)) + E2 * fock.scalar_product(
        fock.project(psi, 2), fock.project(phi, 2)
    )
    assert small(whole - split, core.modulus(whole))
    rebuilt = fock.project(psi, 1) * E1 + fock.project(psi, 2) * E2
    assert fock.max_modulus(rebuilt - psi) == 0.0
    with pytest.raises(ValueError):
        fock.project(psi, 0)


# ---- adjoint ----
def test_adjoint_properties():
    rng = np.random.default_rng(11)
    a, b = random_operator(rng), random_operator(rng)
    psi, chi = random_ket(rng), random_ket(rng)
    w = BiComplex(0.3, -1.2, 2.0, 0.7)
    assert fock.max_modulus(fock.adjoint(fock.adjoint(a)) - a) == 0.0
    assert fock.operators_close(fock.adjoint(a @ b), fock.adjoint(b) @ fock.adjoint(a))
    assert fock.operators_close(fock.adjoint(a * w), fock.adjoint(a) * core.conj_dagger(w))
    lhs = fock.scalar_product(psi, a @ chi)
    rhs = fock.scalar_product(fock.adjoint(a) @ psi, chi)
    assert small(lhs - rhs, core.modulus(lhs) * 10)


def test_self_adjointness():
    rng = np.random.default_rng(3)
    a = random_operator(rng)
    assert fock.is_self_adjoint(a + fock.adjoint(a))
    assert fock.is_self_adjoint(BiOperator.diagonal([ONE, E1, J * 2.5]))
    assert not fock.is_self_adjoint(BiOperator.identity(3) * I1)
    assert not fock.is_self_adjoint(a)


def test_operator_algebra():
    rng = np.random.default_rng(5)
    a = random_operator(rng)
    eye = BiOperator.identity(DIM)
    assert fock.max_modulus(eye @ a - a) == 0.0
    assert fock.max_modulus(fock.commutator(a, eye)) == 0.0
    assert fock.max_modulus(a - a) == 0.0
    assert (a.block(2)).dim == 2
    with pytest.raises(DimensionMismatch):
        a @ BiOperator.identity(DIM + 1)
    with pytest.raises(DimensionMismatch):
        a @ Ket.basis(0, DIM + 1)


# ---- norm and null cone ----
def test_ket_norm_examples():
    assert fock.ket_norm(Ket.basis(0, DIM)) == 1.0
    assert fock.ket_norm(Ket.zeros(DIM)) == 0.0
    assert fock.ket_norm(Ket.basis(0, DIM) * E1) == pytest.approx(1 / math.sqrt(2))
    psi = Ket.from_coords([3.0, 4.0])
    assert fock.ket_norm(psi) == pytest.approx(5.0)


@given(kets)
def test_norm_identity(psi):
    n1, n2 = fock.projection_norms(psi)
    assert fock.ket_norm(psi) == pytest.approx(math.sqrt((n1 ** 2 + n2 ** 2) / 2), rel=1e-12, abs=1e-300)


def test_ket_null_cone():
    assert fock.ket_in_null_cone(Ket.basis(0, DIM) * E1)
    assert fock.ket_in_null_cone(Ket.basis(0, DIM) * E2 + Ket.basis(3, DIM) * E2)
    assert not fock.ket_in_null_cone(Ket.basis(0, DIM))
    assert not fock.ket_in_null_cone(Ket.basis(0, DIM) * E1 + Ket.basis(1, DIM) * E2)
    assert not fock.ket_in_null_cone(Ket.zeros(DIM))


def test_cauchy_equivalence():
    base = Ket.basis(0, DIM) + Ket.basis(2, DIM) * I1
    converging = [base * (1.0 - 2.0 ** -m) for m in range(30)]
    assert fock.tail_diameter(converging, 20) < 1e-5
    assert max(fock.projection_tail_diameters(converging, 20)) < 1e-5

    flipping = [Ket.basis(0, DIM) * E1 + Ket.basis(1, DIM) * (E2 * (-1) ** m) for m in range(10)]
    d1, d2 = fock.projection_tail_diameters(flipping, 2)
    assert d1 == 0.0
    assert d2 == pytest.approx(2.0)
    assert fock.tail_diameter(flipping, 2) == pytest.approx(math.sqrt(2))


# ---- JSON ----
def test_json_round_trip():
    psi = Ket.from_coords([E1, I1, ONE])
    obj = fock.ket_to_json(psi)
    assert obj["dim"] == 3
    assert fock.kets_close(fock.ket_from_json(obj), psi)
    op = BiOperator.diagonal([E1, E2])
    back = fock.operator_from_json(fock.operator_to_json(op, idempotent=True))
    assert fock.operators_close(back, op)
    with pytest.raises(DimensionMismatch):
        fock.ket_from_json({"dim": 4, "coords": obj["coords"]})
