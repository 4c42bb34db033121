"""From an extremal rotation angle to a canonical braid-matrix pair.

theta -> phi via cos(phi) = cos(theta) / (1 - cos(theta)), then
(A, B) = (d^J(theta), D^J(theta, phi)), then a fixed unitary conjugation
that brings the pair into the diagonal-A form.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import cxmat, wigner, ybe
from .errors import (NoBraidSolutionError, SingularityError, UnsupportedError,
                     ValidationError)
from .tl_braid import BraidPair

SQ2 = math.sqrt(2.0)
SQ3 = math.sqrt(3.0)
SQ6 = math.sqrt(6.0)


class BrmTag(str, Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"


class Convention(str, Enum):
    U_X_UDAG = "UXUdag"
    UDAG_X_U = "UdagXU"


@dataclass(frozen=True)
class BrmType:
    tag: BrmTag
    theta_star: float
    phi_star: float

    def __post_init__(self):
        c = math.cos(self.theta_star)
        if abs(math.cos(self.phi_star) - c / (1 - c)) > 1e-12:
            raise ValidationError("theta_star and phi_star violate the braid constraint")

    @classmethod
    def canonical(cls, tag: BrmTag | str, two_j: int = 1) -> "BrmType":
        """Type I sits at the l1 maximum, type II at the minimum theta = pi.

        The spin-1/2 type-I pair uses theta = -pi/2; the spin-1 and spin-3/2
        pairs use theta = +pi/2. phi is +pi/2 or +2pi/3.
        """
        tag = BrmTag(tag)
        if tag is BrmTag.TYPE_I:
            return cls(tag, -math.pi / 2 if two_j == 1 else math.pi / 2, math.pi / 2)
        return cls(tag, math.pi, 2 * math.pi / 3)


def phi_from_theta(theta: float) -> float:
    den = 1 - math.cos(theta)
    if abs(den) < 1e-15:
        raise SingularityError("theta = 0 is degenerate: 1 - cos(theta) = 0")
    ratio = math.cos(theta) / den
    if abs(ratio) > 1 + 1e-12:
        raise NoBraidSolutionError(f"|cos(theta)/(1-cos(theta))| = {abs(ratio):.6g} > 1")
    return math.acos(max(-1.0, min(1.0, ratio)))


def brm_pair(two_j, theta: float, phi_sign: int = 1) -> BraidPair:
    if phi_sign not in (1, -1):
        raise ValidationError("phi_sign must be +1 or -1")
    phi = phi_sign * phi_from_theta(theta)
    return BraidPair.of(wigner.little_d(two_j, theta), wigner.big_D(two_j, theta, phi))


def conjugate(x: np.ndarray, u: np.ndarray, convention: Convention) -> np.ndarray:
    if Convention(convention) is Convention.U_X_UDAG:
        return u @ x @ cxmat.dagger(u)
    return cxmat.dagger(u) @ x @ u


def conjugate_pair(p: BraidPair, u: np.ndarray, convention: Convention | str,
                   tol: float = 1e-12) -> BraidPair:
    if u.shape != p.a.shape:
        raise ValidationError(f"conjugator shape {u.shape} does not match {p.a.shape}")
    if not cxmat.is_unitary(u, tol):
        raise ValidationError("conjugator is not unitary")
    conv = Convention(convention)
    return BraidPair.of(conjugate(p.a, u, conv), conjugate(p.b, u, conv))


def fit_phase(x: np.ndarray, ref: np.ndarray) -> complex:
    """Unit phase c with x ~ c * ref, read off at the largest entry of ref."""
    idx = np.unravel_index(np.argmax(np.abs(ref)), ref.shape)
    r = x[idx] / ref[idx]
    return r / abs(r)


# conjugators that diagonalize A
_A3 = 1 / (2 * SQ2)
_B3 = SQ6 / 4
CONJUGATORS = {
    1: (np.array([[1, 1j], [1j, 1]], dtype=np.complex128) / SQ2, Convention.U_X_UDAG),
    2: (np.array([[0.5, 1 / SQ2, 0.5],
                  [1j / SQ2, 0, -1j / SQ2],
                  [-0.5, 1 / SQ2, -0.5]], dtype=np.complex128), Convention.UDAG_X_U),
    3: (np.array([[1j * _A3, 1j * _B3, -1j * _B3, -1j * _A3],
                  [-_B3, _A3, _A3, -_B3],
                  [-1j * _B3, 1j * _A3, -1j * _A3, 1j * _B3],
                  [_A3, _B3, _B3, _A3]], dtype=np.complex128), Convention.UDAG_X_U),
}

_W8 = cmath.exp(1j * math.pi / 4)

# reference canonical forms; phases are fitted before comparing
REFERENCE = {
    (1, BrmTag.TYPE_I): (
        np.diag([1, 1j]),
        np.array([[1, -1j], [-1j, 1]]) / SQ2,
    ),
    (1, BrmTag.TYPE_II): (
        np.diag([-1, 1]),
        -0.5 * np.array([[1, -SQ3], [-SQ3, -1]]),
    ),
    (2, BrmTag.TYPE_I): (
        np.diag([-1j, 1, 1j]),
        np.array([[0.5, 1 / SQ2, 0.5], [-1 / SQ2, 0, 1 / SQ2], [0.5, -1 / SQ2, 0.5]]),
    ),
    (2, BrmTag.TYPE_II): (
        np.diag([-1, 1, -1]),
        np.array([[-0.25, 1j * SQ6 / 4, 0.75],
                  [-1j * SQ6 / 4, -0.5, -1j * SQ6 / 4],
                  [0.75, 1j * SQ6 / 4, -0.25]]),
    ),
    (3, BrmTag.TYPE_I): (
        np.diag([-_W8, _W8, 1 / _W8, -1 / _W8]),
        np.array([[_A3, _B3, -_B3, -_A3],
                  [_B3, -_A3, _A3, -_B3],
                  [_B3, -_A3, -_A3, _B3],
                  [_A3, _B3, _B3, _A3]]),
    ),
    (3, BrmTag.TYPE_II): (
        np.diag([1j, 1j, -1j, -1j]),
        np.array([[-1j, 3j * SQ3, 3, -3 * SQ3],
                  [3j * SQ3, 5j, -SQ3, 3],
                  [-3, SQ3, -5j, -3j * SQ3],
                  [3 * SQ3, -3, -3j * SQ3, 1j]]) / 8,
    ),
}


@dataclass(frozen=True)
class DerivedBrm:
    brm_type: BrmType
    two_j: int
    a: np.ndarray
    b: np.ndarray
    conjugator: np.ndarray
    a_tilde: np.ndarray
    b_tilde: np.ndarray
    braid_residual: float
    paper_match_residual: float
    overall_phase: complex
    b_phase: complex

    def to_dict(self) -> dict:
        return {
            "two_j": self.two_j,
            "type": self.brm_type.tag.value,
            "theta_star": self.brm_type.theta_star,
            "phi_star": self.brm_type.phi_star,
            "A": matrix_to_json(self.a),
            "B": matrix_to_json(self.b),
            "conjugator": matrix_to_json(self.conjugator),
            "A_tilde": matrix_to_json(self.a_tilde),
            "B_tilde": matrix_to_json(self.b_tilde),
            "braid_residual": self.braid_residual,
            "paper_match_residual": self.paper_match_residual,
            "overall_phase": complex_to_json(self.overall_phase),
            "b_phase": complex_to_json(self.b_phase),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def matrix_to_json(m: np.ndarray) -> list:
    return [[complex_to_json(z) for z in row] for row in m]


def matrix_from_json(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows], dtype=np.complex128)


def canonical_brm(two_j: int, brm_type: BrmType | BrmTag | str) -> DerivedBrm:
    """Run the pipeline at the stored (theta*, phi*) and compare with the reference pair.

    A and B each get their own fitted unit phase; ``overall_phase`` is the one
    for A.
    """
    n = two_j.twice if isinstance(two_j, wigner.HalfInt) else int(two_j)
    if n not in CONJUGATORS:
        raise UnsupportedError(f"canonical BRMs exist for 2J in {{1,2,3}}, got {n}")
    if not isinstance(brm_type, BrmType):
        brm_type = BrmType.canonical(brm_type, n)
    theta, phi = brm_type.theta_star, brm_type.phi_star
    a = wigner.little_d(n, theta)
    b = wigner.big_D(n, theta, phi)
    u, conv = CONJUGATORS[n]
    conj = conjugate_pair(BraidPair.of(a, b), u, conv)
    ref_a, ref_b = (np.asarray(m, dtype=np.complex128) for m in REFERENCE[(n, brm_type.tag)])
    pa = fit_phase(conj.a, ref_a)
    pb = fit_phase(conj.b, ref_b)
    match = max(cxmat.residual(conj.a, pa * ref_a), cxmat.residual(conj.b, pb * ref_b))
    braid = max(cxmat.braid_residual(a, b), conj.braid_residual)
    return DerivedBrm(brm_type, n, a, b, u, conj.a, conj.b, braid, match, pa, pb)


def _half_angle_middle(tag: BrmTag, theta1: float, theta3: float) -> float:
    if tag is BrmTag.TYPE_I:
        # Lorentz on tan(theta/2), written so it never divides by zero for real input
        h1, h3 = theta1 / 2, theta3 / 2
        den = math.cos(h1 - h3)
        if abs(den) < 1e-12 and abs(math.sin(h1 + h3)) < 1e-12:
            raise SingularityError("Lorentz composition pole")
        return 2 * math.atan2(math.sin(h1 + h3), den)
    u1, u3 = math.tan(theta1 / 2), math.tan(theta3 / 2)
    return 2 * math.atan(u1 + u3)


def ybe_2d_check(brm_type: BrmType | BrmTag | str, theta1: float, theta3: float) -> float:
    """Spectral YBE for the spin-1/2 pair in the basis where A is diagonal."""
    if not isinstance(brm_type, BrmType):
        brm_type = BrmType.canonical(brm_type, 1)
    phi = brm_type.phi_star
    theta2 = _half_angle_middle(brm_type.tag, theta1, theta3)
    ap, bp = ybe.a_prime, ybe.b_prime
    lhs = ap(theta1) @ bp(theta2, phi) @ ap(theta3)
    rhs = bp(theta3, phi) @ ap(theta2) @ bp(theta1, phi)
    return cxmat.residual(lhs, rhs)


def b_prime_closed(theta: float, phi: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array(
        [[c + 1j * s * math.cos(phi), 1j * math.sin(phi) * s],
         [1j * math.sin(phi) * s, c - 1j * s * math.cos(phi)]],
        dtype=np.complex128,
    )


def r4_from_d(theta: float, phi: float) -> np.ndarray:
    """4x4 type-I R-matrix carrying e^{-i phi} in the upper corner."""
    return ybe.r4_type_one(theta, -phi)


def constraint_curve(n_points: int) -> np.ndarray:
    """theta samples on [-pi, -pi/3] U [pi/3, pi], half on each side."""
    half = n_points // 2
    right = np.linspace(math.pi / 3, math.pi, n_points - half)
    left = -np.linspace(math.pi / 3, math.pi, half)[::-1]
    return np.concatenate([left, right])
