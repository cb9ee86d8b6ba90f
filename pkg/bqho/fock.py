# bqho/fock.py
"""
Truncated free T-module in the {|phi_l>} basis, l = 0..N.

Kets and operators keep their two idempotent components as dense complex numpy
arrays (c1, c2) / (m1, m2); every T-linear operation then acts componentwise.
Identities that involve A* hold exactly only on the l <= N-1 block: the top basis
state is the truncation boundary.
"""

import logging
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from bqho.core import (
    DEFAULT_TOL,
    BiComplex,
    Hyperbolic,
    Tolerance,
    bicomplex_from_json,
    bicomplex_to_json,
    dplus_func,
    modulus,
)
from bqho.errors import DimensionMismatch, IndexOutOfRange

logger = logging.getLogger(__name__)


def _frozen(values, ndim: int) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-d array, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


def _entry_modulus(a1: np.ndarray, a2: np.ndarray) -> np.ndarray:
    # |w| = sqrt((|z1|^2 + |z2|^2) / 2), entrywise
    return np.sqrt((np.abs(a1) ** 2 + np.abs(a2) ** 2) / 2.0)


# ==================== KET ====================
class Ket:
    """Coordinate vector over T; coordinate l is the coefficient of |phi_l>."""

    __slots__ = ("c1", "c2")
    __array_ufunc__ = None

    def __init__(self, c1, c2):
        c1, c2 = _frozen(c1, 1), _frozen(c2, 1)
        if c1.shape != c2.shape:
            raise DimensionMismatch(c1.shape[0], c2.shape[0])
        self.c1, self.c2 = c1, c2

    @classmethod
    def zeros(cls, dim: int) -> "Ket":
        return cls(np.zeros(dim), np.zeros(dim))

    @classmethod
    def basis(cls, l: int, dim: int) -> "Ket":
        if not 0 <= l < dim:
            raise IndexOutOfRange(f"basis index {l} outside 0..{dim - 1}")
        v = np.zeros(dim, dtype=complex)
        v[l] = 1.0
        return cls(v, v)

    @classmethod
    def from_coords(cls, coords: Iterable) -> "Ket":
        coords = [BiComplex.coerce(w) for w in coords]
        return cls([w.z1 for w in coords], [w.z2 for w in coords])

    @property
    def dim(self) -> int:
        return self.c1.shape[0]

    @property
    def coords(self) -> List[BiComplex]:
        return [BiComplex.from_idempotent(a, b) for a, b in zip(self.c1, self.c2)]

    def coord(self, l: int) -> BiComplex:
        return BiComplex.from_idempotent(self.c1[l], self.c2[l])

    def is_zero(self) -> bool:
        return not (np.any(self.c1) or np.any(self.c2))

    def _check(self, other: "Ket"):
        if self.dim != other.dim:
            raise DimensionMismatch(self.dim, other.dim)

    def __add__(self, other):
        if not isinstance(other, Ket):
            return NotImplemented
        self._check(other)
        return Ket(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other):
        if not isinstance(other, Ket):
            return NotImplemented
        self._check(other)
        return Ket(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self):
        return Ket(-self.c1, -self.c2)

    def __mul__(self, scalar):
        try:
            s = BiComplex.coerce(scalar)
        except TypeError:
            return NotImplemented
        return Ket(s.z1 * self.c1, s.z2 * self.c2)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Ket(dim={self.dim}, coords={[str(w) for w in self.coords]})"


# ==================== OPERATOR ====================
class BiOperator:
    """Dense (N+1)x(N+1) matrix over T, A = e1*A1 + e2*A2."""

    __slots__ = ("m1", "m2")
    __array_ufunc__ = None

    def __init__(self, m1, m2):
        m1, m2 = _frozen(m1, 2), _frozen(m2, 2)
        if m1.shape != m2.shape or m1.shape[0] != m1.shape[1]:
            raise DimensionMismatch(m1.shape, m2.shape)
        self.m1, self.m2 = m1, m2

    @classmethod
    def identity(cls, dim: int) -> "BiOperator":
        eye = np.eye(dim, dtype=complex)
        return cls(eye, eye)

    @classmethod
    def zeros(cls, dim: int) -> "BiOperator":
        return cls(np.zeros((dim, dim)), np.zeros((dim, dim)))

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence]) -> "BiOperator":
        rows = [[BiComplex.coerce(w) for w in row] for row in rows]
        return cls([[w.z1 for w in row] for row in rows], [[w.z2 for w in row] for row in rows])

    @classmethod
    def diagonal(cls, values: Sequence) -> "BiOperator":
        values = [BiComplex.coerce(w) for w in values]
        return cls(np.diag([w.z1 for w in values]), np.diag([w.z2 for w in values]))

    @property
    def dim(self) -> int:
        return self.m1.shape[0]

    def entry(self, row: int, col: int) -> BiComplex:
        return BiComplex.from_idempotent(self.m1[row, col], self.m2[row, col])

    def block(self, size: int) -> "BiOperator":
        """Leading size x size block (the levels unaffected by truncation)."""
        return BiOperator(self.m1[:size, :size], self.m2[:size, :size])

    def apply(self, ket: Ket) -> Ket:
        if ket.dim != self.dim:
            raise DimensionMismatch(self.dim, ket.dim)
        return Ket(self.m1 @ ket.c1, self.m2 @ ket.c2)

    def __matmul__(self, other):
        if isinstance(other, Ket):
            return self.apply(other)
        if isinstance(other, BiOperator):
            if other.dim != self.dim:
                raise DimensionMismatch(self.dim, other.dim)
            return BiOperator(self.m1 @ other.m1, self.m2 @ other.m2)
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, BiOperator):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatch(self.dim, other.dim)
        return BiOperator(self.m1 + other.m1, self.m2 + other.m2)

    def __sub__(self, other):
        if not isinstance(other, BiOperator):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return BiOperator(-self.m1, -self.m2)

    def __mul__(self, scalar):
        try:
            s = BiComplex.coerce(scalar)
        except TypeError:
            return NotImplemented
        return BiOperator(s.z1 * self.m1, s.z2 * self.m2)

    __rmul__ = __mul__

    def __repr__(self):
        return f"BiOperator(dim={self.dim})"


# ==================== SCALAR PRODUCT & PROJECTIONS ====================
def scalar_product(psi: Ket, chi: Ket) -> BiComplex:
    """(psi, chi) = sum_l w_l† v_l, antilinear in the first slot."""
    if psi.dim != chi.dim:
        raise DimensionMismatch(psi.dim, chi.dim)
    return BiComplex.from_idempotent(np.vdot(psi.c1, chi.c1), np.vdot(psi.c2, chi.c2))


def project(psi: Ket, k: int) -> Ket:
    """P_k(psi) re-embedded as a ket with complex (C(i1)) coefficients."""
    if k not in (1, 2):
        raise ValueError(f"idempotent index must be 1 or 2, got {k}")
    comp = psi.c1 if k == 1 else psi.c2
    return Ket(comp, comp)


def adjoint(op: BiOperator) -> BiOperator:
    """†-conjugate transpose; the unique B with (psi, A chi) = (B psi, chi)."""
    return BiOperator(op.m1.conj().T, op.m2.conj().T)


def commutator(a: BiOperator, b: BiOperator) -> BiOperator:
    if a.dim != b.dim:
        raise DimensionMismatch(a.dim, b.dim)
    return a @ b - b @ a


def max_modulus(value: Union[Ket, BiOperator]) -> float:
    """Largest entrywise bicomplex modulus (the worst residual of a difference)."""
    if isinstance(value, Ket):
        arr = _entry_modulus(value.c1, value.c2)
    else:
        arr = _entry_modulus(value.m1, value.m2)
    return float(arr.max()) if arr.size else 0.0


def operators_close(a: BiOperator, b: BiOperator, tol: Tolerance = DEFAULT_TOL) -> bool:
    if a.dim != b.dim:
        raise DimensionMismatch(a.dim, b.dim)
    scale = max(max_modulus(a), max_modulus(b))
    return max_modulus(a - b) <= tol.bound(scale)


def kets_close(psi: Ket, chi: Ket, tol: Tolerance = DEFAULT_TOL) -> bool:
    if psi.dim != chi.dim:
        raise DimensionMismatch(psi.dim, chi.dim)
    scale = max(max_modulus(psi), max_modulus(chi))
    return max_modulus(psi - chi) <= tol.bound(scale)


def is_self_adjoint(op: BiOperator, tol: Tolerance = DEFAULT_TOL) -> bool:
    return operators_close(op, adjoint(op), tol)


# ==================== NORM & NULL CONE ====================
def ket_norm(psi: Ket) -> float:
    """|sqrt((psi, psi))|, equal to sqrt((||P1 psi||^2 + ||P2 psi||^2) / 2)."""
    sp = scalar_product(psi, psi)
    # (psi, psi) is exactly real per component; clamp the sign of a rounded zero
    h = Hyperbolic(max(sp.z1.real, 0.0), max(sp.z2.real, 0.0))
    return modulus(dplus_func(h, "sqrt"))


def projection_norms(psi: Ket) -> Tuple[float, float]:
    return float(np.linalg.norm(psi.c1)), float(np.linalg.norm(psi.c2))


def ket_in_null_cone(psi: Ket, tol: Tolerance = DEFAULT_TOL) -> bool:
    if psi.is_zero():
        return False
    n1, n2 = projection_norms(psi)
    return min(n1, n2) <= tol.bound(max(n1, n2))


def tail_diameter(kets: Sequence[Ket], start: int = 0) -> float:
    """max Norm(psi_m - psi_n) over m, n >= start."""
    tail = list(kets)[start:]
    worst = 0.0
    for a in range(len(tail)):
        for b in range(a + 1, len(tail)):
            worst = max(worst, ket_norm(tail[a] - tail[b]))
    return worst


def projection_tail_diameters(kets: Sequence[Ket], start: int = 0) -> Tuple[float, float]:
    """Tail diameters of the P1 and P2 sequences in their natural complex norms."""
    tail = list(kets)[start:]
    d1 = d2 = 0.0
    for a in range(len(tail)):
        for b in range(a + 1, len(tail)):
            n1, n2 = projection_norms(tail[a] - tail[b])
            d1, d2 = max(d1, n1), max(d2, n2)
    return d1, d2


# ==================== JSON ====================
def ket_to_json(psi: Ket, idempotent: bool = False) -> dict:
    return {"dim": psi.dim, "coords": [bicomplex_to_json(w, idempotent) for w in psi.coords]}


def ket_from_json(obj: dict) -> Ket:
    psi = Ket.from_coords(bicomplex_from_json(w) for w in obj["coords"])
    if psi.dim != obj["dim"]:
        raise DimensionMismatch(obj["dim"], psi.dim)
    return psi


def operator_to_json(op: BiOperator, idempotent: bool = False) -> dict:
    return {
        "dim": op.dim,
        "entries": [
            [bicomplex_to_json(op.entry(r, c), idempotent) for c in range(op.dim)]
            for r in range(op.dim)
        ],
    }


def operator_from_json(obj: dict) -> BiOperator:
    op = BiOperator.from_entries([[bicomplex_from_json(w) for w in row] for row in obj["entries"]])
    if op.dim != obj["dim"]:
        raise DimensionMismatch(obj["dim"], op.dim)
    return op
