# bqho/oscillator.py
"""
Algebraic solution of the bicomplex harmonic oscillator on the truncated module.

    [X, P] = i hbar xi I,          xi = xi1 e1 + xi2 e2,   xi1, xi2 > 0
    A  = (m omega X + i P) / sqrt(2 m hbar omega),  A* its adjoint
    H  = hbar omega (A* A + xi/2 I)

The ground state is the ket annihilated by A, and every eigenket has the form
w1 e1 |phi_l> + w2 e2 |phi_l'> with eigenvalue hbar omega [(l+1/2) xi1 e1 + (l'+1/2) xi2 e2].
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd

from bqho.core import (
    DEFAULT_TOL,
    I1,
    BiComplex,
    Hyperbolic,
    Tolerance,
    dplus_func,
    hyperbolic_to_json,
    is_null_cone,
)
from bqho.errors import (
    BothZero,
    ConstraintViolated,
    DomainError,
    IndexOutOfRange,
    InvalidParams,
    SpectrumError,
    ZeroScale,
)
from bqho.fock import (
    BiOperator,
    Ket,
    adjoint,
    ket_norm,
    max_modulus,
    scalar_product,
)

logger = logging.getLogger(__name__)

# relative slack left for the sqrt-then-square rounding on the diagonal of A* A
_ROUNDING_FLOOR = 1e-14

SPECTRUM_COLUMNS = ("l", "lprime", "E1", "E2", "norm")


# ==================== PARAMETERS ====================
@dataclass(frozen=True)
class OscillatorParams:
    m: float = 1.0
    omega: float = 1.0
    hbar: float = 1.0
    xi: Hyperbolic = field(default_factory=lambda: Hyperbolic(1.0, 1.0))

    def __post_init__(self):
        for name in ("m", "omega", "hbar"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and value > 0 and math.isfinite(value)):
                raise InvalidParams(f"{name} must be a positive real, got {value!r}")
        # xi in D+ strictly, which also keeps it out of the null cone
        if not self.xi.in_d_plus(strict=True) or not all(map(math.isfinite, (self.xi.x1, self.xi.x2))):
            raise InvalidParams(f"xi components must both be > 0, got ({self.xi.x1}, {self.xi.x2})")

    @classmethod
    def from_components(cls, m=1.0, omega=1.0, hbar=1.0, xi1=1.0, xi2=1.0) -> "OscillatorParams":
        return cls(float(m), float(omega), float(hbar), Hyperbolic(xi1, xi2))

    @property
    def quantum(self) -> float:
        """hbar * omega."""
        return self.hbar * self.omega

    def energy(self, l: int, lprime: int) -> Hyperbolic:
        return Hyperbolic((l + 0.5) * self.xi.x1, (lprime + 0.5) * self.xi.x2) * self.quantum


@dataclass(frozen=True)
class SpectrumEntry:
    l: int
    lprime: int
    energy: Hyperbolic
    ket: Ket = field(compare=False)

    def to_record(self) -> dict:
        return {
            "l": self.l,
            "lprime": self.lprime,
            "energy": hyperbolic_to_json(self.energy),
            "norm": ket_norm(self.ket),
        }

    def to_row(self) -> dict:
        """Flat CSV row: l, lprime, E1, E2, then the norm."""
        return {
            "l": self.l,
            "lprime": self.lprime,
            "E1": self.energy.x1,
            "E2": self.energy.x2,
            "norm": ket_norm(self.ket),
        }


def _check_truncation(n: int):
    if not isinstance(n, int) or n < 1:
        raise InvalidParams(f"truncation N must be an integer >= 1, got {n!r}")


# ==================== OPERATORS ====================
def build_ladder(n: int, p: OscillatorParams) -> Tuple[BiOperator, BiOperator]:
    """A|phi_{l+1}> = sqrt((l+1) xi)|phi_l>, A* = adjoint(A)."""
    _check_truncation(n)
    dim = n + 1
    m1 = np.zeros((dim, dim), dtype=complex)
    m2 = np.zeros((dim, dim), dtype=complex)
    for l in range(n):
        root = dplus_func(p.xi * (l + 1), "sqrt")
        m1[l, l + 1], m2[l, l + 1] = root.x1, root.x2
    a = BiOperator(m1, m2)
    logger.debug("built ladder pair for N=%d, xi=%s", n, p.xi)
    return a, adjoint(a)


def build_hamiltonian(n: int, p: OscillatorParams) -> BiOperator:
    """hbar omega (A* A + xi/2 I); A* A is unaffected by the truncation."""
    a, astar = build_ladder(n, p)
    half_xi = p.xi * 0.5
    return (astar @ a + BiOperator.identity(n + 1) * half_xi) * p.quantum


def build_hamiltonian_lowered(n: int, p: OscillatorParams) -> BiOperator:
    """hbar omega (A A* - xi/2 I); agrees with build_hamiltonian on the l < N block."""
    a, astar = build_ladder(n, p)
    return (a @ astar - BiOperator.identity(n + 1) * (p.xi * 0.5)) * p.quantum


def build_position_momentum(n: int, p: OscillatorParams) -> Tuple[BiOperator, BiOperator]:
    a, astar = build_ladder(n, p)
    x = (a + astar) * math.sqrt(p.hbar / (2 * p.m * p.omega))
    mom = (a - astar) * (-I1 * math.sqrt(p.hbar * p.m * p.omega / 2))
    return x, mom


def build_hamiltonian_xp(n: int, p: OscillatorParams) -> BiOperator:
    """P^2/2m + m omega^2 X^2 / 2; agrees with build_hamiltonian on the l < N block."""
    x, mom = build_position_momentum(n, p)
    return (mom @ mom) * (1 / (2 * p.m)) + (x @ x) * (0.5 * p.m * p.omega ** 2)


# ==================== EIGENKETS ====================
def eigen_residual(h: BiOperator, entry: SpectrumEntry) -> float:
    """max |(H - lambda) psi| entrywise."""
    return max_modulus(h @ entry.ket - entry.ket * entry.energy)


def eigenket(
    l: int,
    lprime: int,
    w1: complex,
    w2: complex,
    n: int,
    p: OscillatorParams,
    tol: Tolerance = DEFAULT_TOL,
    hamiltonian: Optional[BiOperator] = None,
) -> SpectrumEntry:
    """w1 e1 |phi_l> + w2 e2 |phi_l'> with its hyperbolic eigenvalue."""
    _check_truncation(n)
    if not (0 <= l <= n and 0 <= lprime <= n):
        raise IndexOutOfRange(f"levels ({l}, {lprime}) outside 0..{n}")
    if w1 == 0 and w2 == 0:
        raise BothZero("eigenket coefficients w1 and w2 are both zero")

    c1 = [0j] * (n + 1)
    c2 = [0j] * (n + 1)
    c1[l] = complex(w1)
    c2[lprime] = complex(w2)
    entry = SpectrumEntry(l, lprime, p.energy(l, lprime), Ket(c1, c2))

    if hamiltonian is None:
        hamiltonian = build_hamiltonian(n, p)
    residual = eigen_residual(hamiltonian, entry)
    scale = max(abs(entry.energy.x1), abs(entry.energy.x2)) * max(abs(w1), abs(w2))
    if residual > tol.bound(scale) + _ROUNDING_FLOOR * scale:
        raise SpectrumError(f"H psi != lambda psi for (l={l}, l'={lprime}): residual {residual:.3e}")
    return entry


def spectrum(n: int, p: OscillatorParams, max_l: int, max_lprime: int) -> List[SpectrumEntry]:
    """All (l, l') pairs with unit coefficients, l major and l' minor."""
    _check_truncation(n)
    if not (0 <= max_l <= n and 0 <= max_lprime <= n):
        raise IndexOutOfRange(f"spectrum bounds ({max_l}, {max_lprime}) outside 0..{n}")
    h = build_hamiltonian(n, p)
    return [
        eigenket(l, lp, 1, 1, n, p, hamiltonian=h)
        for l in range(max_l + 1)
        for lp in range(max_lprime + 1)
    ]


def spectrum_table(entries: List[SpectrumEntry]) -> pd.DataFrame:
    return pd.DataFrame([e.to_row() for e in entries], columns=list(SPECTRUM_COLUMNS))


STANDARD_EMBEDDINGS = ("e1", "e2", "diagonal")


def standard_embedding(kind: str, l: int, n: int, p: OscillatorParams) -> SpectrumEntry:
    """
    The three ways the ordinary oscillator sits inside the bicomplex one:
    e1-only kets, e2-only kets, or the diagonal l = l' family.
    """
    if kind == "e1":
        return eigenket(l, 0, 1, 0, n, p)
    if kind == "e2":
        return eigenket(0, l, 0, 1, n, p)
    if kind == "diagonal":
        return eigenket(l, l, 1, 1, n, p)
    raise ValueError(f"unknown embedding {kind!r}; choose from {STANDARD_EMBEDDINGS}")


def orthogonality_expected(a: SpectrumEntry, b: SpectrumEntry, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Eigenkets are guaranteed orthogonal when their eigenvalue difference is invertible."""
    diff = (a.energy - b.energy).to_bicomplex()
    return not diff.is_zero() and not is_null_cone(diff, tol)


# ==================== LADDER NORMS ====================
def ladder_norm_residuals(phi: Ket, lam: Hyperbolic, n: int, p: OscillatorParams) -> Tuple[BiComplex, BiComplex]:
    """
    Residuals of
        (A phi, A phi)   - (lam / hbar omega - xi/2) (phi, phi)
        (A* phi, A* phi) - (lam / hbar omega + xi/2) (phi, phi)
    for an eigenket phi of H with eigenvalue lam. The A* residual is only
    meaningful when phi has no weight on the top level N.
    """
    a, astar = build_ladder(n, p)
    a_phi, astar_phi = a @ phi, astar @ phi
    norm = scalar_product(phi, phi)
    scaled = lam / p.quantum
    half_xi = p.xi * 0.5
    lowered = scalar_product(a_phi, a_phi) - (scaled - half_xi) * norm
    raised = scalar_product(astar_phi, astar_phi) - (scaled + half_xi) * norm
    return lowered, raised


# ==================== XI RESCALING ====================
def rescale_xi(xi: Hyperbolic, alpha1: float, alpha2: float, beta1: float, beta2: float) -> Hyperbolic:
    """
    X = (alpha1 e1 + alpha2 e2) X', P = (beta1 e1 + beta2 e2) P' turns xi into
    xi' = xi1/(alpha1 beta1) e1 + xi2/(alpha2 beta2) e2. The Hamiltonian keeps its
    form only if |alpha1| = |alpha2| and |beta1| = |beta2|.
    """
    if 0 in (alpha1, alpha2, beta1, beta2):
        raise ZeroScale("rescaling factors must all be non-zero")
    if not math.isclose(abs(alpha1), abs(alpha2), rel_tol=1e-12):
        raise ConstraintViolated(f"|alpha1| = {abs(alpha1)} differs from |alpha2| = {abs(alpha2)}")
    if not math.isclose(abs(beta1), abs(beta2), rel_tol=1e-12):
        raise ConstraintViolated(f"|beta1| = {abs(beta1)} differs from |beta2| = {abs(beta2)}")
    rescaled = Hyperbolic(xi.x1 / (alpha1 * beta1), xi.x2 / (alpha2 * beta2))
    if not rescaled.in_d_plus(strict=True):
        logger.debug("rescaling (%g, %g, %g, %g) takes xi out of D+: %s", alpha1, alpha2, beta1, beta2, rescaled)
        raise DomainError(rescaled, f"rescaled xi {rescaled} leaves D+")
    return rescaled


def normalize_xi(xi: Hyperbolic) -> Hyperbolic:
    """Pick alpha = beta = sqrt(xi1) on both components so that xi1' = 1."""
    s = math.sqrt(xi.x1)
    return rescale_xi(xi, s, s, s, s)


def xi_ratio(xi: Hyperbolic) -> float:
    """|xi2 / xi1|, unchanged by every admissible rescaling."""
    return abs(xi.x2 / xi.x1)
