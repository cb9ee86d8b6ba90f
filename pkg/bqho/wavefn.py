# bqho/wavefn.py
"""
The function module M_S: bicomplex functions u = e1*u1 + e2*u2 whose idempotent
components are finite sums of terms c * x**n * exp(-alpha * x**2).

Everything here stays inside M_S: X raises the power, P = -i hbar xi d/dx maps a
term onto two terms, and the scalar product reduces to closed-form Gaussian
moments. scipy quadrature is kept only as an independent oracle.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Tuple

import numpy as np
import pandas as pd
from scipy import integrate

from bqho.core import BiComplex, Hyperbolic, dplus_func
from bqho.errors import InvalidParams, OrderTooLarge
from bqho.oscillator import OscillatorParams

logger = logging.getLogger(__name__)

MAX_HERMITE_ORDER = 60
ALPHA_MERGE_REL = 1e-14


# ==================== TERMS ====================
@dataclass(frozen=True)
class MsTerm:
    """c * x**n * exp(-alpha * x**2)."""

    n: int
    alpha: float
    c: complex

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise InvalidParams(f"term power must be a non-negative integer, got {self.n!r}")
        if not self.alpha > 0:
            raise InvalidParams(f"Gaussian width alpha must be > 0, got {self.alpha!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "c", complex(self.c))

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(over="ignore", invalid="ignore"):
            direct = x ** self.n * np.exp(-self.alpha * x * x)
        bad = ~np.isfinite(direct)
        if np.any(bad):
            # x**n overflowed before the Gaussian could damp it: redo those points in log space
            with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
                logged = np.sign(x) ** self.n * np.exp(self.n * np.log(np.abs(x)) - self.alpha * x * x)
            direct = np.where(bad, logged, direct)
        return self.c * direct


Terms = Tuple[MsTerm, ...]


def canonicalize(terms: Iterable[MsTerm]) -> Terms:
    """Merge equal (n, alpha) pairs, alpha compared to ALPHA_MERGE_REL; drop zero coefficients."""
    merged = []
    for t in sorted(terms, key=lambda t: (t.alpha, t.n)):
        for i, kept in enumerate(merged):
            if kept.n == t.n and math.isclose(kept.alpha, t.alpha, rel_tol=ALPHA_MERGE_REL):
                merged[i] = MsTerm(kept.n, kept.alpha, kept.c + t.c)
                break
        else:
            merged.append(t)
    return tuple(t for t in merged if t.c != 0)


def _scaled(terms: Terms, z: complex) -> Terms:
    return tuple(MsTerm(t.n, t.alpha, z * t.c) for t in terms)


def _x_times(terms: Terms) -> Terms:
    return tuple(MsTerm(t.n + 1, t.alpha, t.c) for t in terms)


def _derivative(terms: Terms) -> Terms:
    # d/dx x^n e^{-a x^2} = n x^{n-1} e^{-a x^2} - 2a x^{n+1} e^{-a x^2}
    out = []
    for t in terms:
        if t.n > 0:
            out.append(MsTerm(t.n - 1, t.alpha, t.n * t.c))
        out.append(MsTerm(t.n + 1, t.alpha, -2.0 * t.alpha * t.c))
    return canonicalize(out)


# ==================== FUNCTIONS ====================
@dataclass(frozen=True)
class MsFunction:
    comp1: Terms = ()
    comp2: Terms = ()

    def __post_init__(self):
        object.__setattr__(self, "comp1", canonicalize(self.comp1))
        object.__setattr__(self, "comp2", canonicalize(self.comp2))

    @classmethod
    def symmetric(cls, terms: Iterable[MsTerm]) -> "MsFunction":
        """A function with complex (C(i1)) values: u1 = u2."""
        terms = tuple(terms)
        return cls(terms, terms)

    def component(self, k: int) -> Terms:
        if k not in (1, 2):
            raise ValueError(f"idempotent index must be 1 or 2, got {k}")
        return self.comp1 if k == 1 else self.comp2

    def evaluate(self, x):
        """(u1(x), u2(x)); x may be a scalar or an array."""
        x = np.asarray(x, dtype=float)
        u1 = sum((t.evaluate(x) for t in self.comp1), np.zeros_like(x, dtype=complex))
        u2 = sum((t.evaluate(x) for t in self.comp2), np.zeros_like(x, dtype=complex))
        return u1, u2

    def value_at(self, x: float) -> BiComplex:
        u1, u2 = self.evaluate(x)
        return BiComplex.from_idempotent(complex(u1), complex(u2))

    def scale(self, w) -> "MsFunction":
        w = BiComplex.coerce(w)
        return MsFunction(_scaled(self.comp1, w.z1), _scaled(self.comp2, w.z2))

    def max_coefficient(self) -> float:
        return max((abs(t.c) for t in self.comp1 + self.comp2), default=0.0)

    def __add__(self, other):
        if not isinstance(other, MsFunction):
            return NotImplemented
        return MsFunction(self.comp1 + other.comp1, self.comp2 + other.comp2)

    def __neg__(self):
        return self.scale(-1.0)

    def __sub__(self, other):
        if not isinstance(other, MsFunction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        try:
            return self.scale(scalar)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__


# ==================== OPERATORS ON M_S ====================
def apply_X(u: MsFunction) -> MsFunction:
    return MsFunction(_x_times(u.comp1), _x_times(u.comp2))


def derivative(u: MsFunction) -> MsFunction:
    return MsFunction(_derivative(u.comp1), _derivative(u.comp2))


def apply_P(u: MsFunction, p: OscillatorParams) -> MsFunction:
    """P = -i hbar xi d/dx, xi acting componentwise."""
    du = derivative(u)
    return MsFunction(
        _scaled(du.comp1, -1j * p.hbar * p.xi.x1),
        _scaled(du.comp2, -1j * p.hbar * p.xi.x2),
    )


def apply_H(u: MsFunction, p: OscillatorParams) -> MsFunction:
    """P^2 / 2m + m omega^2 X^2 / 2."""
    kinetic = apply_P(apply_P(u, p), p).scale(1.0 / (2 * p.m))
    potential = apply_X(apply_X(u)).scale(0.5 * p.m * p.omega ** 2)
    return kinetic + potential


# ==================== SCALAR PRODUCT ====================
def _double_factorial(n: int) -> int:
    return math.prod(range(n, 0, -2))


def gaussian_moment(n: int, beta: float) -> float:
    """Integral of x**n exp(-beta x**2) over the real line."""
    if n % 2:
        return 0.0
    return _double_factorial(n - 1) * math.sqrt(math.pi / beta) / (2 * beta) ** (n // 2)


def _component_product(left: Terms, right: Terms) -> complex:
    return sum(
        (a.c.conjugate() * b.c * gaussian_moment(a.n + b.n, a.alpha + b.alpha) for a in left for b in right),
        0j,
    )


def ms_scalar_product(u: MsFunction, v: MsFunction) -> BiComplex:
    """(u, v) = integral of u†(x) v(x) dx, computed per idempotent component."""
    return BiComplex.from_idempotent(
        _component_product(u.comp1, v.comp1),
        _component_product(u.comp2, v.comp2),
    )


def _half_width(left: Terms, right: Terms) -> float:
    # |integrand| <= C x^n exp(-beta x^2); past L it is below double-precision noise
    if not left or not right:
        return 1.0
    beta = min(t.alpha for t in left) + min(t.alpha for t in right)
    n_max = max(t.n for t in left) + max(t.n for t in right)
    return 1.5 * math.sqrt((37.0 + n_max) / beta)


def _quad_component(left: Terms, right: Terms) -> complex:
    if not left or not right:
        return 0j
    width = _half_width(left, right)

    def integrand(x: float) -> complex:
        a = sum(t.c * x ** t.n * math.exp(-t.alpha * x * x) for t in left)
        b = sum(t.c * x ** t.n * math.exp(-t.alpha * x * x) for t in right)
        return a.conjugate() * b

    opts = dict(limit=400, epsabs=1e-14, epsrel=1e-12, points=(0.0,))
    re, _ = integrate.quad(lambda x: integrand(x).real, -width, width, **opts)
    im, _ = integrate.quad(lambda x: integrand(x).imag, -width, width, **opts)
    return complex(re, im)


def ms_quadrature_product(u: MsFunction, v: MsFunction) -> BiComplex:
    """Adaptive-quadrature oracle for ms_scalar_product."""
    return BiComplex.from_idempotent(
        _quad_component(u.comp1, v.comp1),
        _quad_component(u.comp2, v.comp2),
    )


# ==================== HERMITE ====================
@dataclass(frozen=True)
class HermitePoly:
    """Physicists' Hermite polynomial with exact integer coefficients, lowest power first."""

    l: int
    coeffs: Tuple[int, ...]

    def __call__(self, y):
        return np.polynomial.polynomial.polyval(y, np.array(self.coeffs, dtype=float))


@lru_cache(maxsize=None)
def hermite_coeffs(l: int) -> HermitePoly:
    """H_{l+1}(y) = 2y H_l(y) - 2l H_{l-1}(y), H_0 = 1, H_1 = 2y."""
    if not isinstance(l, int) or l < 0:
        raise ValueError(f"Hermite order must be a non-negative integer, got {l!r}")
    if l > MAX_HERMITE_ORDER:
        raise OrderTooLarge(l, MAX_HERMITE_ORDER)
    prev, cur = [1], [0, 2]
    if l == 0:
        return HermitePoly(0, (1,))
    for k in range(1, l):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= 2 * k * c
        prev, cur = cur, nxt
    return HermitePoly(l, tuple(cur))


def hermite_hyperbolic_eval(l: int, theta: Hyperbolic) -> Hyperbolic:
    """H_l(theta) = H_l(theta1) e1 + H_l(theta2) e2."""
    return theta.map(lambda y: float(hermite_coeffs(l)(y)))


# ==================== EIGENFUNCTIONS ====================
def theta_of_x(x: float, p: OscillatorParams) -> Hyperbolic:
    """theta = sqrt(m omega / hbar xi) x, through the D+ inverse square root of xi."""
    return dplus_func(p.xi, "inv_nth_root", 2) * (math.sqrt(p.m * p.omega / p.hbar) * x)


def normalization(l: int, p: OscillatorParams) -> Hyperbolic:
    """(m omega / pi hbar xi)^(1/4) / sqrt(2^l l!)."""
    root = dplus_func(p.xi * (math.pi * p.hbar / (p.m * p.omega)), "inv_nth_root", 4)
    return root * (1.0 / math.sqrt(2 ** l * math.factorial(l)))


def phi_l(l: int, p: OscillatorParams) -> MsFunction:
    """l-th eigenfunction: both idempotent components are ordinary oscillator states with hbar -> hbar xi_k."""
    herm = hermite_coeffs(l)
    norm = normalization(l, p)
    scale = theta_of_x(1.0, p)
    alpha = scale * scale * 0.5

    def terms(nk: float, sk: float, ak: float) -> Terms:
        return tuple(MsTerm(n, ak, nk * h * sk ** n) for n, h in enumerate(herm.coeffs) if h)

    return MsFunction(terms(norm.x1, scale.x1, alpha.x1), terms(norm.x2, scale.x2, alpha.x2))


def phi_l_pointwise(l: int, p: OscillatorParams, x: float) -> Hyperbolic:
    """N exp(-theta^2 / 2) H_l(theta) evaluated entirely in D."""
    theta = theta_of_x(x, p)
    gauss = dplus_func(theta * theta * -0.5, "exp")
    return normalization(l, p) * gauss * hermite_hyperbolic_eval(l, theta)


def standard_phi(l: int, m: float, omega: float, hbar: float, x: float) -> float:
    """Ordinary real oscillator eigenfunction."""
    s = math.sqrt(m * omega / hbar)
    pref = (m * omega / (math.pi * hbar)) ** 0.25 / math.sqrt(2 ** l * math.factorial(l))
    return pref * math.exp(-0.5 * (s * x) ** 2) * float(hermite_coeffs(l)(s * x))


def phi_mixed(l: int, lprime: int, w1: complex, w2: complex, p: OscillatorParams) -> MsFunction:
    """e1 w1 phi_{l,1} + e2 w2 phi_{l',2}."""
    return MsFunction(
        _scaled(phi_l(l, p).comp1, complex(w1)),
        _scaled(phi_l(lprime, p).comp2, complex(w2)),
    )


def to_unit_j_form(u: MsFunction, x):
    """u(x) = a + j b with a = (u1 + u2)/2 and b = (u1 - u2)/2."""
    u1, u2 = u.evaluate(x)
    return (u1 + u2) / 2, (u1 - u2) / 2


# ==================== RESIDUALS ====================
def hamiltonian_residual_components(
    l: int, p: OscillatorParams, energy: Optional[Hyperbolic] = None
) -> Tuple[float, float]:
    """Largest coefficient of H phi_l - E phi_l, per idempotent component."""
    u = phi_l(l, p)
    e = p.energy(l, l) if energy is None else energy
    residual = apply_H(u, p) - u.scale(e)
    r1 = max((abs(t.c) for t in residual.comp1), default=0.0)
    r2 = max((abs(t.c) for t in residual.comp2), default=0.0)
    return r1, r2


def hamiltonian_residual(l: int, p: OscillatorParams, energy: Optional[Hyperbolic] = None) -> float:
    return max(hamiltonian_residual_components(l, p, energy))


# ==================== EXPORT ====================
def sample_table(u: MsFunction, xs, unit_j: bool = False) -> pd.DataFrame:
    xs = np.asarray(xs, dtype=float)
    u1, u2 = u.evaluate(xs)
    frame = pd.DataFrame(
        {
            "x": xs,
            "u1_re": u1.real,
            "u1_im": u1.imag,
            "u2_re": u2.real,
            "u2_im": u2.imag,
        }
    )
    if unit_j:
        real_part, j_part = to_unit_j_form(u, xs)
        frame["real_re"], frame["real_im"] = real_part.real, real_part.imag
        frame["j_re"], frame["j_im"] = j_part.real, j_part.imag
    return frame
