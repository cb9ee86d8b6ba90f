# bqho/core.py
"""
Bicomplex (T) and hyperbolic (D) arithmetic.

A bicomplex number is stored by its four canonical real components

    w = w_e + w_i1 * i1 + w_i2 * i2 + w_j * j,     i1^2 = i2^2 = -1,  j^2 = +1,

and its idempotent view w = z1 * e1 + z2 * e2 (z1, z2 complex numbers in C(i1)) is
derived on demand:

    z1 = (w_e + w_j) + (w_i1 - w_i2) i,      z2 = (w_e - w_j) + (w_i1 + w_i2) i.

e1 = (1 + j) / 2 and e2 = (1 - j) / 2 are exactly representable in binary floating
point, so the unit table and the idempotent identities hold with zero error. The
round trip canonical -> idempotent -> canonical is exact up to one rounding per
component.
"""

import logging
import math
from dataclasses import dataclass
from numbers import Complex, Real
from typing import Callable, Dict, Iterable, Optional, Tuple, Union

from bqho.errors import DomainError, InvalidParams, NullConeError, ZeroElementError

logger = logging.getLogger(__name__)


# ==================== TOLERANCE ====================
@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative slack shared by every approximate predicate."""

    abs_eps: float = 0.0
    rel_eps: float = 1e-12

    def __post_init__(self):
        for name in ("abs_eps", "rel_eps"):
            value = float(getattr(self, name))
            if not value >= 0.0:  # also rejects NaN
                raise InvalidParams(f"tolerance {name} must be >= 0, got {value}")
            object.__setattr__(self, name, value)

    def bound(self, scale: float) -> float:
        return self.abs_eps + self.rel_eps * scale


DEFAULT_TOL = Tolerance()


# ==================== COMPONENT KERNELS ====================
# Both kernels work on plain floats and on numpy arrays alike, so the
# vectorised property sweeps in bqho.verify use exactly the same formulas.
def product_components(a, b):
    """Canonical-basis product using i1*i2 = j, i1*j = -i2, i2*j = -i1."""
    ae, ai1, ai2, aj = a
    be, bi1, bi2, bj = b
    return (
        ae * be - ai1 * bi1 - ai2 * bi2 + aj * bj,
        ae * bi1 + ai1 * be - ai2 * bj - aj * bi2,
        ae * bi2 + ai2 * be - ai1 * bj - aj * bi1,
        ae * bj + aj * be + ai1 * bi2 + ai2 * bi1,
    )


def idempotent_components(w_e, w_i1, w_i2, w_j):
    return (w_e + w_j) + 1j * (w_i1 - w_i2), (w_e - w_j) + 1j * (w_i1 + w_i2)


def canonical_components(z1, z2):
    z1, z2 = complex(z1), complex(z2)
    return (
        (z1.real + z2.real) / 2,
        (z1.imag + z2.imag) / 2,
        (z2.imag - z1.imag) / 2,
        (z1.real - z2.real) / 2,
    )


# ==================== BICOMPLEX ====================
Scalar = Union["BiComplex", "Hyperbolic", complex, float, int]


@dataclass(frozen=True)
class BiComplex:
    __array_ufunc__ = None  # numpy scalars defer to the reflected operators

    w_e: float = 0.0
    w_i1: float = 0.0
    w_i2: float = 0.0
    w_j: float = 0.0

    def __post_init__(self):
        for name in ("w_e", "w_i1", "w_i2", "w_j"):
            object.__setattr__(self, name, float(getattr(self, name)))

    # ---- construction ----
    @classmethod
    def from_idempotent(cls, z1: complex, z2: complex) -> "BiComplex":
        return cls(*canonical_components(z1, z2))

    @classmethod
    def from_complex(cls, c: complex) -> "BiComplex":
        """Embed c = a + b*i as a + b*i1."""
        c = complex(c)
        return cls(c.real, c.imag, 0.0, 0.0)

    @classmethod
    def coerce(cls, value: Scalar) -> "BiComplex":
        if isinstance(value, BiComplex):
            return value
        if isinstance(value, Hyperbolic):
            return value.to_bicomplex()
        if isinstance(value, Complex):
            return cls.from_complex(value)
        raise TypeError(f"cannot interpret {value!r} as a bicomplex number")

    # ---- views ----
    @property
    def z1(self) -> complex:
        return idempotent_components(*self.components)[0]

    @property
    def z2(self) -> complex:
        return idempotent_components(*self.components)[1]

    @property
    def components(self) -> Tuple[float, float, float, float]:
        return self.w_e, self.w_i1, self.w_i2, self.w_j

    def is_zero(self) -> bool:
        return not any(self.components)

    # ---- ring operations ----
    def __add__(self, other):
        try:
            other = BiComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return BiComplex(*(a + b for a, b in zip(self.components, other.components)))

    __radd__ = __add__

    def __neg__(self):
        return BiComplex(-self.w_e, -self.w_i1, -self.w_i2, -self.w_j)

    def __sub__(self, other):
        try:
            other = BiComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = BiComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = BiComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return BiComplex(*product_components(self.components, other.components))

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = BiComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self * inverse(other)

    def __rtruediv__(self, other):
        try:
            other = BiComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return other * inverse(self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else inverse(self)
        result, n = ONE, abs(exponent)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return f"{self.w_e:g} {self.w_i1:+g}·i1 {self.w_i2:+g}·i2 {self.w_j:+g}·j"


# ==================== HYPERBOLIC ====================
@dataclass(frozen=True)
class Hyperbolic:
    """x1*e1 + x2*e2 with real idempotent components."""

    __array_ufunc__ = None

    x1: float
    x2: float

    def __post_init__(self):
        object.__setattr__(self, "x1", float(self.x1))
        object.__setattr__(self, "x2", float(self.x2))

    @classmethod
    def from_real(cls, x: float) -> "Hyperbolic":
        return cls(x, x)

    @classmethod
    def from_bicomplex(cls, w: BiComplex, tol: Tolerance = DEFAULT_TOL) -> "Hyperbolic":
        z1, z2 = w.z1, w.z2
        slack = tol.bound(max(abs(z1), abs(z2)))
        if abs(z1.imag) > slack or abs(z2.imag) > slack:
            raise DomainError(w, f"{w} is not hyperbolic")
        return cls(z1.real, z2.real)

    def to_bicomplex(self) -> BiComplex:
        return BiComplex.from_idempotent(self.x1, self.x2)

    def in_d_plus(self, strict: bool = False, tol: Optional[Tolerance] = None) -> bool:
        if strict:
            return self.x1 > 0.0 and self.x2 > 0.0
        slack = (tol or DEFAULT_TOL).bound(max(abs(self.x1), abs(self.x2)))
        return self.x1 >= -slack and self.x2 >= -slack

    def map(self, f: Callable[[float], float]) -> "Hyperbolic":
        return Hyperbolic(f(self.x1), f(self.x2))

    def __add__(self, other):
        if isinstance(other, Hyperbolic):
            return Hyperbolic(self.x1 + other.x1, self.x2 + other.x2)
        if isinstance(other, Real):
            return Hyperbolic(self.x1 + other, self.x2 + other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Hyperbolic(-self.x1, -self.x2)

    def __sub__(self, other):
        if isinstance(other, (Hyperbolic, Real)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Real):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Hyperbolic):
            return Hyperbolic(self.x1 * other.x1, self.x2 * other.x2)
        if isinstance(other, Real):
            return Hyperbolic(self.x1 * other, self.x2 * other)
        if isinstance(other, Complex):
            return self.to_bicomplex() * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Real):
            if other == 0:
                raise ZeroElementError("division of a hyperbolic number by zero")
            return Hyperbolic(self.x1 / other, self.x2 / other)
        if isinstance(other, Hyperbolic):
            if other.x1 == 0.0 and other.x2 == 0.0:
                raise ZeroElementError("division by the zero hyperbolic number")
            if other.x1 == 0.0 or other.x2 == 0.0:
                raise NullConeError(other)
            return Hyperbolic(self.x1 / other.x1, self.x2 / other.x2)
        return NotImplemented

    def __str__(self):
        return f"{self.x1:g}·e1 {self.x2:+g}·e2"


# ==================== CONSTANTS ====================
ZERO = BiComplex()
ONE = BiComplex(1.0)
I1 = BiComplex(0.0, 1.0)
I2 = BiComplex(0.0, 0.0, 1.0)
J = BiComplex(0.0, 0.0, 0.0, 1.0)
E1 = BiComplex(0.5, 0.0, 0.0, 0.5)
E2 = BiComplex(0.5, 0.0, 0.0, -0.5)


# ==================== OPERATIONS ====================
def to_idempotent(w: Scalar) -> Tuple[complex, complex]:
    w = BiComplex.coerce(w)
    return w.z1, w.z2


def project_scalar(w: Scalar, k: int) -> complex:
    """P1 / P2: the k-th idempotent component."""
    if k not in (1, 2):
        raise ValueError(f"idempotent index must be 1 or 2, got {k}")
    return to_idempotent(w)[k - 1]


def mul(s: Scalar, t: Scalar) -> BiComplex:
    return BiComplex.coerce(s) * BiComplex.coerce(t)


def modulus(w: Scalar) -> float:
    """Euclidean norm on R^4, equal to sqrt((|z1|^2 + |z2|^2) / 2)."""
    return math.hypot(*BiComplex.coerce(w).components)


def is_null_cone(w: Scalar, tol: Tolerance = DEFAULT_TOL) -> bool:
    w = BiComplex.coerce(w)
    if w.is_zero():
        return False
    a1, a2 = abs(w.z1), abs(w.z2)
    return min(a1, a2) <= tol.bound(max(a1, a2))


def inverse(w: Scalar, tol: Tolerance = DEFAULT_TOL) -> BiComplex:
    w = BiComplex.coerce(w)
    if w.is_zero():
        raise ZeroElementError("zero has no inverse")
    if is_null_cone(w, tol):
        raise NullConeError(w)
    return BiComplex.from_idempotent(1 / w.z1, 1 / w.z2)


def conj_dagger(w: Scalar) -> BiComplex:
    """w† = conj(z1) e1 + conj(z2) e2, i.e. flip the signs of i1 and i2."""
    w = BiComplex.coerce(w)
    return BiComplex(w.w_e, -w.w_i1, -w.w_i2, w.w_j)


def is_hyperbolic(w: Scalar, tol: Tolerance = DEFAULT_TOL) -> bool:
    try:
        Hyperbolic.from_bicomplex(BiComplex.coerce(w), tol)
    except DomainError:
        return False
    return True


def in_d_plus(w: Scalar, strict: bool = False, tol: Tolerance = DEFAULT_TOL) -> bool:
    if isinstance(w, Hyperbolic):
        return w.in_d_plus(strict, tol)
    try:
        h = Hyperbolic.from_bicomplex(BiComplex.coerce(w), tol)
    except DomainError:
        return False
    return h.in_d_plus(strict, tol)


def in_e_ray(w: Scalar, k: int, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Membership in e1*R+ (k=1) or e2*R+ (k=2)."""
    if not in_d_plus(w, strict=False, tol=tol):
        return False
    z1, z2 = to_idempotent(w)
    kept, dropped = (z1, z2) if k == 1 else (z2, z1)
    return kept.real > 0.0 and abs(dropped) <= tol.bound(abs(kept))


def _as_hyperbolic(h: Union[Hyperbolic, BiComplex, Real]) -> Hyperbolic:
    if isinstance(h, Hyperbolic):
        return h
    if isinstance(h, BiComplex):
        return Hyperbolic.from_bicomplex(h)
    if isinstance(h, Real):
        return Hyperbolic.from_real(h)
    raise TypeError(f"cannot interpret {h!r} as a hyperbolic number")


# ---- D+ functional calculus ----
# name -> (positivity requirement, factory(arg) -> real function)
# requirement is one of None, "nonneg", "strict", "nonzero"
def _pow_requirement(p) -> Optional[str]:
    if float(p).is_integer():
        return "nonzero" if p < 0 else None
    return "strict"


def _is_root_order(arg) -> bool:
    # 2.0 is accepted as 2; 2.5 and True are not
    if isinstance(arg, bool) or not isinstance(arg, Real):
        return False
    return math.isfinite(arg) and float(arg).is_integer() and arg >= 1


DPLUS_FUNCTIONS: Dict[str, Tuple[Callable, Callable]] = {
    "exp": (lambda arg: None, lambda arg: math.exp),
    "sqrt": (lambda arg: "nonneg", lambda arg: math.sqrt),
    "inv_nth_root": (lambda arg: "strict", lambda arg: (lambda x: x ** (-1.0 / int(arg)))),
    "pow": (_pow_requirement, lambda arg: (lambda x: x ** arg)),
}


def dplus_func(h, func: str, arg=None) -> Hyperbolic:
    """Lift a whitelisted real function to D: f(x1) e1 + f(x2) e2."""
    if func not in DPLUS_FUNCTIONS:
        raise ValueError(f"unknown D+ function {func!r}; choose from {sorted(DPLUS_FUNCTIONS)}")
    if func == "inv_nth_root" and not _is_root_order(arg):
        raise ValueError(f"inv_nth_root needs an integer root order n >= 1, got {arg!r}")
    if func == "pow" and arg is None:
        raise ValueError("pow needs an exponent")

    h = _as_hyperbolic(h)
    requirement_of, factory = DPLUS_FUNCTIONS[func]
    requirement = requirement_of(arg)
    if requirement == "nonneg" and not (h.x1 >= 0.0 and h.x2 >= 0.0):
        raise DomainError(h, f"{func} needs both components >= 0, got {h}")
    if requirement == "strict" and not h.in_d_plus(strict=True):
        raise DomainError(h, f"{func} needs both components > 0, got {h}")
    if requirement == "nonzero" and (h.x1 == 0.0 or h.x2 == 0.0):
        raise DomainError(h, f"{func}({arg}) needs non-zero components, got {h}")
    return h.map(factory(arg))


def poly_eval(coeffs: Iterable[complex], w: Scalar) -> BiComplex:
    """Horner evaluation of sum_n coeffs[n] * w**n in the canonical basis."""
    w = BiComplex.coerce(w)
    acc = ZERO
    for c in reversed(list(coeffs)):
        acc = acc * w + BiComplex.coerce(c)
    return acc


# ==================== JSON ====================
def bicomplex_to_json(w: Scalar, idempotent: bool = False) -> dict:
    w = BiComplex.coerce(w)
    if idempotent:
        z1, z2 = w.z1, w.z2
        return {"z1": [z1.real, z1.imag], "z2": [z2.real, z2.imag]}
    return {"e": w.w_e, "i1": w.w_i1, "i2": w.w_i2, "j": w.w_j}


def bicomplex_from_json(obj: dict) -> BiComplex:
    if "z1" in obj or "z2" in obj:
        z1 = complex(*obj.get("z1", (0.0, 0.0)))
        z2 = complex(*obj.get("z2", (0.0, 0.0)))
        return BiComplex.from_idempotent(z1, z2)
    return BiComplex(obj.get("e", 0.0), obj.get("i1", 0.0), obj.get("i2", 0.0), obj.get("j", 0.0))


def hyperbolic_to_json(h: Hyperbolic) -> dict:
    return {"x1": h.x1, "x2": h.x2}
