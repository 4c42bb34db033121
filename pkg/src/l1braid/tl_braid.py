"""4x4 Temperley-Lieb generators and the braid matrices built from them.

Two families are covered. Type I is tied to the Bell basis and has loop value
sqrt(2). Type II is the q-deformed permutation with loop value q + 1/q.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import cxmat
from .errors import DecompositionError, UnsupportedError, ValidationError

SQRT2 = math.sqrt(2.0)

# permutation used to rotate the primed type-II generator into the corner form
V_SWAP = np.array(
    [[0, 1, 0, 0],
     [1, 0, 0, 0],
     [0, 0, 0, 1],
     [0, 0, 1, 0]],
    dtype=np.complex128,
)


class Tag(str, Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    TYPE_II_PRIME = "TypeIIPrime"


class Root(str, Enum):
    PLUS = "Plus"
    MINUS = "Minus"


@dataclass(frozen=True)
class TLFamily:
    tag: Tag
    alpha: float = 0.0
    epsilon: int = 1
    q: complex = 1.0

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValidationError(f"epsilon must be +1 or -1, got {self.epsilon}")
        if self.q == 0:
            raise ValidationError("q must be nonzero")

    @property
    def phase(self) -> complex:
        """e^{i alpha}; plays the role of eta for type II."""
        return cmath.exp(1j * self.alpha)


@dataclass(frozen=True)
class TLGen:
    family: TLFamily
    matrix: np.ndarray
    loop_d: complex


@dataclass(frozen=True)
class BraidPair:
    a: np.ndarray
    b: np.ndarray
    braid_residual: float

    @classmethod
    def of(cls, a: np.ndarray, b: np.ndarray) -> "BraidPair":
        return cls(a, b, cxmat.braid_residual(a, b))


def _real_if_close(z: complex) -> complex | float:
    z = complex(z)
    return z.real if abs(z.imag) < 1e-15 else z


def tl_generator(family: TLFamily) -> TLGen:
    e = family.phase
    if family.tag is Tag.TYPE_I:
        eps = family.epsilon
        m = np.array(
            [[1, 0, 0, e],
             [0, 1, -1j * eps, 0],
             [0, 1j * eps, 1, 0],
             [1 / e, 0, 0, 1]],
            dtype=np.complex128,
        ) / SQRT2
        return TLGen(family, m, SQRT2)

    q = complex(family.q)
    prime = np.array(
        [[0, 0, 0, 0],
         [0, q, e, 0],
         [0, 1 / e, 1 / q, 0],
         [0, 0, 0, 0]],
        dtype=np.complex128,
    )
    d = _real_if_close(q + 1 / q)
    if family.tag is Tag.TYPE_II_PRIME:
        return TLGen(family, prime, d)
    return TLGen(family, V_SWAP @ prime @ cxmat.dagger(V_SWAP), d)


def tl_residuals(t: TLGen) -> tuple[float, float, float]:
    """Residuals of T^2 = dT and of T1 T2 T1 = T1, T2 T1 T2 = T2 on three sites."""
    m = t.matrix
    r_square = cxmat.residual(m @ m, t.loop_d * m)
    t1 = cxmat.embed_left(m)
    t2 = cxmat.embed_right(m)
    r_left = cxmat.residual(t1 @ t2 @ t1, t1)
    r_right = cxmat.residual(t2 @ t1 @ t2, t2)
    return r_square, r_left, r_right


def f_roots(d: float) -> tuple[complex, complex]:
    """Roots of f^2 + d f + 1 = 0, ordered (Plus, Minus)."""
    disc = cmath.sqrt(complex(d) ** 2 - 4)
    return (-d + disc) / 2, (-d - disc) / 2


def s_matrix(t: TLGen, root: Root = Root.PLUS) -> np.ndarray:
    """S = I + f T; the overall scale is left at 1."""
    plus, minus = f_roots(t.loop_d)
    f = plus if root is Root.PLUS else minus
    return cxmat.identity(4) + f * t.matrix


def braid_from_tl(t: TLGen, root: Root = Root.PLUS) -> BraidPair:
    s = s_matrix(t, root)
    return BraidPair.of(cxmat.embed_left(s), cxmat.embed_right(s))


def unitary_s(t: TLGen, root: Root = Root.PLUS, tol: float = 1e-10) -> np.ndarray:
    """rho (I + f T) with rho fixed so the result is unitary and S[0,0] > 0."""
    s = s_matrix(t, root)
    gram = s @ cxmat.dagger(s)
    c = gram[0, 0].real
    if c <= 0 or cxmat.residual(gram / c, cxmat.identity(4)) > tol:
        raise ValidationError("I + fT is not proportional to a unitary matrix")
    s = s / math.sqrt(c)
    if abs(s[0, 0]) > tol:
        s = s * cmath.exp(-1j * cmath.phase(s[0, 0]))
    return s


def b_one(q: complex = 1.0, epsilon: int = 1) -> np.ndarray:
    """Type-I braid matrix (1 + M)/sqrt(2) with M^2 = -1."""
    return np.array(
        [[1, 0, 0, q],
         [0, 1, epsilon, 0],
         [0, -epsilon, 1, 0],
         [-1 / q, 0, 0, 1]],
        dtype=np.complex128,
    ) / SQRT2


def b_two(q: complex = 1.0, eta: complex = 1.0) -> np.ndarray:
    """q-deformed permutation; q = 1, eta = -1 is the plain swap."""
    return np.array(
        [[q, 0, 0, 0],
         [0, 0, -eta, 0],
         [0, -1 / eta, q - 1 / q, 0],
         [0, 0, 0, q]],
        dtype=np.complex128,
    )


def bell_transform() -> np.ndarray:
    """Bell-basis change of basis W; rows are (Phi+, Psi+, -Psi-, -Phi-)."""
    return np.array(
        [[1, 0, 0, 1],
         [0, 1, 1, 0],
         [0, -1, 1, 0],
         [-1, 0, 0, 1]],
        dtype=np.complex128,
    ) / SQRT2


@dataclass(frozen=True)
class TypeOneMatch:
    scale: complex
    q: complex
    epsilon: int
    residual: float


def match_type_one(s: np.ndarray) -> TypeOneMatch:
    """Fit s = scale * b_one(q, epsilon) by entrywise ratios."""
    scale = s[0, 0] * SQRT2
    if abs(scale) < 1e-14:
        raise ValidationError("s[0,0] vanishes; not of type-I shape")
    q = s[0, 3] * SQRT2 / scale
    eps_raw = (s[1, 2] * SQRT2 / scale).real
    eps = 1 if eps_raw >= 0 else -1
    if abs(q) < 1e-14:
        raise ValidationError("corner entry vanishes; not of type-I shape")
    fitted = scale * b_one(q, eps)
    return TypeOneMatch(complex(scale), complex(q), eps, cxmat.residual(s, fitted))


@dataclass(frozen=True)
class KauffmanDecomposition:
    alpha: complex
    t: np.ndarray
    d: complex
    rho: complex


_CLUSTER_TOL = 1e-9


def _eigenvalues(s: np.ndarray) -> list[complex]:
    off = [(0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2)]
    if s.shape == (4, 4) and all(abs(s[i, j]) < 1e-14 for i, j in off):
        vals = []
        for i, j in ((0, 3), (1, 2)):
            a, b, c, d = s[i, i], s[i, j], s[j, i], s[j, j]
            tr, det = a + d, a * d - b * c
            root = cmath.sqrt(tr * tr - 4 * det)
            vals += [(tr + root) / 2, (tr - root) / 2]
        return vals
    return [complex(v) for v in np.linalg.eigvals(s)]


def _cluster(vals: list[complex]) -> list[tuple[complex, int]]:
    groups: list[list[complex]] = []
    for v in vals:
        for g in groups:
            if abs(g[0] - v) < _CLUSTER_TOL:
                g.append(v)
                break
        else:
            groups.append([v])
    return [(complex(np.mean(g)), len(g)) for g in groups]


def kauffman_decompose(s: np.ndarray, tol: float = 1e-10) -> KauffmanDecomposition:
    """Write s = rho (alpha I + alpha^{-1} T) with T^2 = d T, d = -(alpha^2 + alpha^-2).

    The eigenvalue of higher multiplicity is taken as the kernel of T (ties go
    to the larger argument), and the square-root branch is chosen so the loop
    value has non-negative real part.
    """
    clusters = _cluster(_eigenvalues(s))
    if len(clusters) != 2:
        raise DecompositionError(f"need exactly two distinct eigenvalues, found {len(clusters)}")
    (l1, m1), (l2, m2) = clusters
    if m1 < m2 or (m1 == m2 and cmath.phase(l1) < cmath.phase(l2)):
        (l1, m1), (l2, m2) = (l2, m2), (l1, m1)
    alpha4 = -l1 / l2
    a2 = cmath.sqrt(alpha4)
    if (-(a2 + 1 / a2)).real < 0:
        a2 = -a2
    alpha = cmath.sqrt(a2)
    d = _real_if_close(-(a2 + 1 / a2))
    rho = l1 / alpha
    n = s.shape[0]
    t = alpha * (s / rho - alpha * cxmat.identity(n))
    if cxmat.residual(t @ t, d * t) > tol:
        raise DecompositionError("s is not diagonalizable with two eigenvalues")
    return KauffmanDecomposition(alpha, t, d, rho)


_SP = np.array([[0, 1], [0, 0]], dtype=np.complex128)
_SM = _SP.T.copy()
_SZ = np.diag([0.5, -0.5]).astype(np.complex128)


def spin_operator_form(family: TLFamily) -> np.ndarray:
    """Two-site T assembled from S^+, S^-, S^z in the basis (uu, ud, du, dd).

    The type-I expansion carries +i eps (S+S- - S-S+), which lands on the
    generator with the opposite eps sign: the result equals
    tl_generator(TLFamily(TypeI, alpha, -eps)).
    """
    e = family.phase
    pp = cxmat.kron(_SP, _SP)
    mm = cxmat.kron(_SM, _SM)
    if family.tag is Tag.TYPE_I:
        pm = cxmat.kron(_SP, _SM)
        mp = cxmat.kron(_SM, _SP)
        return (cxmat.identity(4) + e * pp + mm / e + 1j * family.epsilon * (pm - mp)) / SQRT2
    if family.tag is Tag.TYPE_II:
        if family.q != 1:
            raise UnsupportedError("spin form is only given at q = 1")
        zz = cxmat.kron(_SZ, _SZ)
        return 0.5 * (cxmat.identity(4) + 4 * zz) + e * pp + mm / e
    raise UnsupportedError(f"no spin-operator expansion for {family.tag.value}")
