"""Spectral-parameter R-matrix families and Yang-Baxter residuals.

Each family carries a composition rule for the middle argument. The rule is
applied to the family's "velocity" variable, which is not always the raw
argument:

    R4TypeI            argument theta, Lorentz on tan(theta)
    R4TypeII           argument u, Galileo on u
    A2TypeI / B2TypeI  argument u, Lorentz on beta*u
    A2TypeII / B2TypeII argument u, Galileo on u

rho(u) is set to 1 everywhere; it multiplies both sides of the YBE equally.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import cxmat, wigner
from .errors import SingularityError, ValidationError

_POLE_TOL = 1e-12


class Rule(str, Enum):
    LORENTZ = "Lorentz"
    GALILEO = "Galileo"
    MULTIPLICATIVE = "Multiplicative"


@dataclass(frozen=True)
class CompositionRule:
    tag: Rule

    def compose(self, v1: complex, v3: complex) -> complex:
        if self.tag is Rule.GALILEO:
            return v1 + v3
        if self.tag is Rule.MULTIPLICATIVE:
            return v1 * v3
        den = 1 + v1 * v3
        if abs(den) < _POLE_TOL:
            raise SingularityError("Lorentz composition pole: 1 + v1*v3 = 0")
        return (v1 + v3) / den


LORENTZ = CompositionRule(Rule.LORENTZ)
GALILEO = CompositionRule(Rule.GALILEO)
MULTIPLICATIVE = CompositionRule(Rule.MULTIPLICATIVE)


class FamilyTag(str, Enum):
    R4_TYPE_I = "R4TypeI"
    R4_TYPE_II = "R4TypeII"
    A2_TYPE_I = "A2TypeI"
    B2_TYPE_I = "B2TypeI"
    A2_TYPE_II = "A2TypeII"
    B2_TYPE_II = "B2TypeII"


_DEFAULT_RULE = {
    FamilyTag.R4_TYPE_I: LORENTZ,
    FamilyTag.R4_TYPE_II: GALILEO,
    FamilyTag.A2_TYPE_I: LORENTZ,
    FamilyTag.B2_TYPE_I: LORENTZ,
    FamilyTag.A2_TYPE_II: GALILEO,
    FamilyTag.B2_TYPE_II: GALILEO,
}

# the 2-dim families come in (A, B) pairs
_PARTNER = {
    FamilyTag.A2_TYPE_I: FamilyTag.B2_TYPE_I,
    FamilyTag.B2_TYPE_I: FamilyTag.A2_TYPE_I,
    FamilyTag.A2_TYPE_II: FamilyTag.B2_TYPE_II,
    FamilyTag.B2_TYPE_II: FamilyTag.A2_TYPE_II,
}


@dataclass(frozen=True)
class SpectralFamily:
    tag: FamilyTag
    alpha: float = 0.0
    eta: complex = 1.0
    gamma: complex = 1.0
    epsilon: int = 1
    beta: float = 1.0
    rule: CompositionRule | None = field(default=None)

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValidationError(f"epsilon must be +1 or -1, got {self.epsilon}")
        if self.rule is None:
            object.__setattr__(self, "rule", _DEFAULT_RULE[self.tag])

    @property
    def dim(self) -> int:
        return 4 if self.tag in (FamilyTag.R4_TYPE_I, FamilyTag.R4_TYPE_II) else 2

    def partner(self) -> "SpectralFamily":
        if self.dim == 4:
            return self
        return SpectralFamily(_PARTNER[self.tag], self.alpha, self.eta, self.gamma,
                              self.epsilon, self.beta, self.rule)


def permutation_eta(eta: complex) -> np.ndarray:
    """Two-site swap dressed with eta; eta = -1 gives the plain permutation."""
    return np.array(
        [[1, 0, 0, 0],
         [0, 0, -eta, 0],
         [0, -1 / eta, 0, 0],
         [0, 0, 0, 1]],
        dtype=np.complex128,
    )


def r4_type_one(theta: complex, alpha: float = 0.0) -> np.ndarray:
    c, s = cmath.cos(theta), cmath.sin(theta)
    e = cmath.exp(1j * alpha)
    return np.array(
        [[c, 0, 0, e * s],
         [0, c, s, 0],
         [0, -s, c, 0],
         [-s / e, 0, 0, c]],
        dtype=np.complex128,
    )


def _type_one_den(u: complex, beta: float, eps: int) -> tuple[complex, complex]:
    bu = beta * u
    base = 1 + bu * bu
    return base + 2j * eps * bu, base - 2j * eps * bu


def eval_family(fam: SpectralFamily, u: complex) -> np.ndarray:
    t = fam.tag
    if t is FamilyTag.R4_TYPE_I:
        return r4_type_one(u, fam.alpha)
    if t is FamilyTag.R4_TYPE_II:
        return cxmat.identity(4) + u * permutation_eta(fam.eta)
    if t in (FamilyTag.A2_TYPE_II, FamilyTag.B2_TYPE_II):
        g = fam.gamma
        den = g - u
        if abs(den) < _POLE_TOL:
            raise SingularityError("pole at gamma - u = 0")
        if t is FamilyTag.A2_TYPE_II:
            return np.diag([(g + u) / den, 1]).astype(np.complex128)
        off = fam.epsilon * math.sqrt(3.0) * u
        return np.array([[2 * g - u, off], [off, 2 * g + u]], dtype=np.complex128) / (2 * den)
    n_plus, n_minus = _type_one_den(u, fam.beta, fam.epsilon)
    if abs(n_minus) < _POLE_TOL:
        raise SingularityError("pole at 1 + beta^2 u^2 - 2 i eps beta u = 0")
    if t is FamilyTag.A2_TYPE_I:
        return np.diag([n_plus / n_minus, 1]).astype(np.complex128)
    bu = fam.beta * u
    diag = 1 + bu * bu
    off = 2j * fam.epsilon * bu
    return np.array([[diag, off], [off, diag]], dtype=np.complex128) / n_minus


def _velocity(fam: SpectralFamily, u: complex) -> complex:
    if fam.tag is FamilyTag.R4_TYPE_I:
        return cmath.tan(u)
    if fam.tag in (FamilyTag.A2_TYPE_I, FamilyTag.B2_TYPE_I):
        return fam.beta * u
    return u


def _from_velocity(fam: SpectralFamily, v: complex) -> complex:
    if fam.tag in (FamilyTag.A2_TYPE_I, FamilyTag.B2_TYPE_I):
        return v / fam.beta
    return v


def middle_argument(fam: SpectralFamily, u1: complex, u3: complex) -> complex:
    if fam.tag is FamilyTag.R4_TYPE_I and fam.rule.tag is Rule.LORENTZ:
        # tan(t2) = sin(t1 + t3) / cos(t1 - t3); stays finite where tan blows up
        if complex(u1).imag == 0 and complex(u3).imag == 0:
            a, b = float(np.real(u1)), float(np.real(u3))
            return math.atan2(math.sin(a + b), math.cos(a - b))
        den = cmath.cos(u1 - u3)
        if abs(den) < _POLE_TOL:
            raise SingularityError("Lorentz composition pole: cos(t1 - t3) = 0")
        return cmath.atan(cmath.sin(u1 + u3) / den)
    v2 = fam.rule.compose(_velocity(fam, u1), _velocity(fam, u3))
    return _from_velocity(fam, v2)


def ybe_residual(fam: SpectralFamily, u1: complex, u3: complex) -> float:
    u2 = middle_argument(fam, u1, u3)
    if fam.dim == 4:
        r1, r2, r3 = (eval_family(fam, u) for u in (u1, u2, u3))
        lhs = cxmat.mul(cxmat.embed_left(r1), cxmat.embed_right(r2), cxmat.embed_left(r3))
        rhs = cxmat.mul(cxmat.embed_right(r3), cxmat.embed_left(r2), cxmat.embed_right(r1))
        return cxmat.residual(lhs, rhs)
    a_fam = fam if fam.tag in (FamilyTag.A2_TYPE_I, FamilyTag.A2_TYPE_II) else fam.partner()
    b_fam = a_fam.partner()
    lhs = cxmat.mul(eval_family(a_fam, u1), eval_family(b_fam, u2), eval_family(a_fam, u3))
    rhs = cxmat.mul(eval_family(b_fam, u3), eval_family(a_fam, u2), eval_family(b_fam, u1))
    return cxmat.residual(lhs, rhs)


def ybe_grid(fam: SpectralFamily, values) -> float:
    """Largest YBE residual over all ordered pairs drawn from ``values``."""
    return max(ybe_residual(fam, u1, u3) for u1, u3 in itertools.product(values, values))


def g_function(gamma: complex, u: complex) -> complex:
    den = gamma - u
    if abs(den) < _POLE_TOL:
        raise SingularityError("G(u) pole at u = gamma")
    return u / den


def g_constraint_residual(gamma: complex, u: complex, v: complex, d: float = 2.0) -> float:
    """|[G(u) + G(v) + d G(u)G(v)] - [1 - G(u)G(v)] G(u+v)| with rho = 1."""
    gu, gv, guv = g_function(gamma, u), g_function(gamma, v), g_function(gamma, u + v)
    return abs((gu + gv + d * gu * gv) - (1 - gu * gv) * guv)


def g_sample_points(samples: int, lo: float = 0.1, hi: float = 0.5) -> list[complex]:
    """Midpoint grid on [lo, hi] plus the same points rotated off the real axis."""
    if samples < 1:
        raise ValidationError("samples must be positive")
    step = (hi - lo) / samples
    real = [lo + (k + 0.5) * step for k in range(samples)]
    return real + [x * cmath.exp(0.3j) for x in real]


def verify_G_constraint(gamma: complex, samples: int = 5, d: float = 2.0) -> float:
    """Max constraint residual over all (u, v) pairs from the sample grid.

    Holds identically for d = 2; other d values are measured, not asserted.
    """
    pts = g_sample_points(samples)
    for u, v in itertools.product(pts, pts):
        for w in (u, v, u + v):
            if abs(gamma - w) < 1e-8:
                raise SingularityError(f"sample point {w} sits on the pole gamma={gamma}")
    return max(g_constraint_residual(gamma, u, v, d) for u, v in itertools.product(pts, pts))


# half-angle basis change that diagonalizes d^{1/2}
V2 = np.array([[1, 1j], [1j, 1]], dtype=np.complex128) / math.sqrt(2.0)


def a_prime(theta: float) -> np.ndarray:
    return V2 @ wigner.little_d(1, theta) @ cxmat.dagger(V2)


def b_prime(theta: float, phi: float) -> np.ndarray:
    return V2 @ wigner.big_D(1, theta, phi) @ cxmat.dagger(V2)


def _defining_ratio(fam_tag: str, u: complex, gamma: complex, beta: float, epsilon: int) -> complex:
    if fam_tag == "TypeII":
        den = gamma - u
        if abs(den) < _POLE_TOL:
            raise SingularityError("pole at gamma - u = 0")
        return (gamma + u) / den
    n_plus, n_minus = _type_one_den(u, beta, epsilon)
    if abs(n_minus) < _POLE_TOL:
        raise SingularityError("pole at 1 + beta^2 u^2 - 2 i eps beta u = 0")
    return n_plus / n_minus


@dataclass(frozen=True)
class Reparameterization:
    theta: complex
    matrix_check: float
    sign: int


def reparameterize_theta(fam_tag: str, u: complex, gamma: complex = 1j, beta: float = 1.0,
                         epsilon: int = 1) -> Reparameterization:
    """Solve ratio(u) = e^{-i theta} and compare with the D-function forms.

    The family is scaled by rho = e^{i theta/2}; the comparison is made against
    A'(s theta), B'(s theta, eps phi) for s = +1 and -1 and the smaller residual
    is kept. phi is eps*2pi/3 for type II and pi/2 for type I.
    """
    if fam_tag not in ("TypeI", "TypeII"):
        raise ValidationError(f"unknown family tag {fam_tag!r}")
    ratio = _defining_ratio(fam_tag, u, gamma, beta, epsilon)
    if abs(ratio) < _POLE_TOL:
        raise SingularityError("defining ratio vanishes")
    theta = 1j * cmath.log(ratio)
    if abs(theta.imag) < 1e-15:
        theta = complex(theta.real, 0.0)
    rho = cmath.exp(1j * theta / 2)
    if fam_tag == "TypeII":
        fam_a = SpectralFamily(FamilyTag.A2_TYPE_II, gamma=gamma, epsilon=epsilon)
        phi = epsilon * 2 * math.pi / 3
    else:
        fam_a = SpectralFamily(FamilyTag.A2_TYPE_I, beta=beta, epsilon=epsilon)
        # eps already flips the sign of theta here, so phi stays fixed
        phi = math.pi / 2
    a = rho * eval_family(fam_a, u)
    b = rho * eval_family(fam_a.partner(), u)
    best = (math.inf, 1)
    th = theta.real
    for s in (1, -1):
        r = max(cxmat.residual(a, a_prime(s * th)), cxmat.residual(b, b_prime(s * th, phi)))
        best = min(best, (r, s))
    if abs(theta.imag) > 1e-12:
        # off the unimodular submanifold the D-forms are not defined for real theta
        best = (math.inf, best[1])
    return Reparameterization(theta, best[0], best[1])


def u_for_type_one_theta(theta: float, beta: float = 1.0) -> float:
    """Real u with ratio(u) = e^{-i theta} for the type-I family (eps = -1 sign branch aside).

    Uses 2 beta u / (1 + beta^2 u^2) = tan(theta/2) on the root with |beta u| <= 1.
    """
    t = math.tan(theta / 2)
    bu = t / (1 + math.sqrt(1 - t * t))
    return bu / beta
