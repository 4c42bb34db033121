"""Four-qubit topological basis, its 2x2 Temperley-Lieb action, and SU(2).

Sites are numbered 1..4 and site 1 is the most significant bit of the
16-dim basis index. Spin up is bit 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import cxmat, wigner
from .errors import ValidationError
from .tl_braid import BraidPair, Tag, TLFamily

SITES = (1, 2, 3, 4)
ADJACENT = ((1, 2), (2, 3), (3, 4), (4, 1))


def _check_pair(i: int, j: int):
    if i not in SITES or j not in SITES:
        raise ValidationError(f"sites must lie in 1..4, got ({i}, {j})")
    if i == j:
        raise ValidationError(f"site collision ({i}, {j})")


def pair_states(i: int, j: int, alpha: float, family: TLFamily | None = None):
    """Two-site states psi_ij, phi_ij as 4-vectors ordered (uu, ud, du, dd) on (i, j).

    ``family`` is accepted for symmetry with the other builders; the states
    themselves only depend on alpha.
    """
    _check_pair(i, j)
    r = 1 / math.sqrt(2.0)
    psi = np.array([r, 0, 0, r * cmath.exp(-1j * alpha)], dtype=np.complex128)
    phi = np.array([0, r, -1j * r, 0], dtype=np.complex128)
    return psi, phi


def _bit(index: int, site: int) -> int:
    return (index >> (4 - site)) & 1


def embed_two_site(op: np.ndarray, i: int, j: int) -> np.ndarray:
    """Lift a 4x4 operator on sites (i, j) to the 16-dim space."""
    _check_pair(i, j)
    out = np.zeros((16, 16), dtype=np.complex128)
    mask = (1 << (4 - i)) | (1 << (4 - j))
    for col in range(16):
        sub_c = 2 * _bit(col, i) + _bit(col, j)
        rest = col & ~mask
        for sub_r in range(4):
            row = rest | ((sub_r >> 1) << (4 - i)) | ((sub_r & 1) << (4 - j))
            out[row, col] += op[sub_r, sub_c]
    return out


def product_state(first: tuple[tuple[int, int], np.ndarray],
                  second: tuple[tuple[int, int], np.ndarray]) -> np.ndarray:
    """|v>_{ij} |w>_{kl} on four sites from two disjoint two-site vectors."""
    (i, j), v = first
    (k, l), w = second
    if len({i, j, k, l}) != 4:
        raise ValidationError("the two pairs must cover four distinct sites")
    out = np.zeros(16, dtype=np.complex128)
    for idx in range(16):
        a = 2 * _bit(idx, i) + _bit(idx, j)
        b = 2 * _bit(idx, k) + _bit(idx, l)
        out[idx] = v[a] * w[b]
    return out


def _loop_value(family: TLFamily) -> float:
    return math.sqrt(2.0) if family.tag is Tag.TYPE_I else 2.0


def two_site_tl(family: TLFamily) -> np.ndarray:
    psi, phi = pair_states(1, 2, family.alpha)
    if family.tag is Tag.TYPE_I:
        return math.sqrt(2.0) * (np.outer(psi, psi.conj()) + np.outer(phi, phi.conj()))
    return 2 * np.outer(psi, psi.conj())


def tl_site_operator(family: TLFamily, i: int, j: int) -> np.ndarray:
    if (i, j) not in ADJACENT:
        raise ValidationError(f"({i}, {j}) is not an adjacent pair of the ring")
    return embed_two_site(two_site_tl(family), i, j)


@dataclass(frozen=True)
class TopoBasis:
    family: TLFamily
    e1: np.ndarray
    e2: np.ndarray
    loop_d: float
    epsilon: int


def topo_basis(family: TLFamily, epsilon: int = 1) -> TopoBasis:
    """Orthonormal |e1>, |e2> carrying the 2-dim Temperley-Lieb representation.

    |e1> is the cup product state on (12)(34). |e2> is fixed by
    T23 |e1> = (|e1> + eps sqrt(d^2 - 1) |e2>) / d.
    For type II this coincides with the cup construction 2 psi23 psi41 - e1.
    """
    if epsilon not in (1, -1):
        raise ValidationError(f"epsilon must be +1 or -1, got {epsilon}")
    d = _loop_value(family)
    a = family.alpha
    psi12, phi12 = pair_states(1, 2, a)
    psi34, phi34 = pair_states(3, 4, a)
    if family.tag is Tag.TYPE_I:
        e1 = (product_state(((1, 2), psi12), ((3, 4), psi34))
              + product_state(((1, 2), phi12), ((3, 4), phi34))) / math.sqrt(2.0)
    else:
        e1 = product_state(((1, 2), psi12), ((3, 4), psi34))
    t23 = tl_site_operator(family, 2, 3)
    e2 = epsilon * (d * (t23 @ e1) - e1) / math.sqrt(d * d - 1)
    return TopoBasis(family, e1, e2, d, epsilon)


def type_two_cup_e2(alpha: float, epsilon: int = 1) -> np.ndarray:
    """Type-II |e2> from cups: eps/sqrt(3) (2 psi23 psi41 - psi12 psi34)."""
    psi12, _ = pair_states(1, 2, alpha)
    psi34, _ = pair_states(3, 4, alpha)
    psi23, _ = pair_states(2, 3, alpha)
    psi41, _ = pair_states(4, 1, alpha)
    e1 = product_state(((1, 2), psi12), ((3, 4), psi34))
    return epsilon * (2 * product_state(((2, 3), psi23), ((4, 1), psi41)) - e1) / math.sqrt(3.0)


def _matrix_elements(op: np.ndarray, basis: TopoBasis) -> np.ndarray:
    vecs = (basis.e1, basis.e2)
    return np.array([[np.vdot(u, op @ v) for v in vecs] for u in vecs], dtype=np.complex128)


def tl_action_2d(basis: TopoBasis) -> tuple[np.ndarray, np.ndarray]:
    t12 = _matrix_elements(tl_site_operator(basis.family, 1, 2), basis)
    t23 = _matrix_elements(tl_site_operator(basis.family, 2, 3), basis)
    return t12, t23


def expected_tl_action(d: float, epsilon: int) -> tuple[np.ndarray, np.ndarray]:
    r = math.sqrt(d * d - 1)
    t12 = np.diag([d, 0]).astype(np.complex128)
    t23 = np.array([[1, epsilon * r], [epsilon * r, d * d - 1]], dtype=np.complex128) / d
    return t12, t23


def ab_from_alpha(alpha: complex, d: float, epsilon: int = 1, tol: float = 1e-10) -> BraidPair:
    """A = alpha + t12/alpha and B = alpha + t23/alpha on the topological basis."""
    if abs(d + alpha ** 2 + alpha ** -2) > tol:
        raise ValidationError(f"d={d} is inconsistent with alpha={alpha}")
    r = epsilon * math.sqrt(d * d - 1)
    a = np.diag([alpha + d / alpha, alpha]).astype(np.complex128)
    b = np.array(
        [[1 + alpha ** 2 * d, r],
         [r, alpha ** 2 * d + d * d - 1]],
        dtype=np.complex128,
    ) / (alpha * d)
    return BraidPair.of(a, b)


def su2_generators(basis: TopoBasis) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    e1p = (basis.e1 + 1j * basis.e2) / math.sqrt(2.0)
    e2p = (1j * basis.e1 + basis.e2) / math.sqrt(2.0)
    jp = np.outer(e1p, e2p.conj())
    jz = 0.5 * (np.outer(e1p, e1p.conj()) - np.outer(e2p, e2p.conj()))
    return jp, cxmat.dagger(jp), jz


def rotated_basis(basis: TopoBasis) -> tuple[np.ndarray, np.ndarray]:
    return ((basis.e1 + 1j * basis.e2) / math.sqrt(2.0),
            (1j * basis.e1 + basis.e2) / math.sqrt(2.0))


def casimir(jp: np.ndarray, jm: np.ndarray, jz: np.ndarray) -> np.ndarray:
    return 0.5 * (jp @ jm + jm @ jp) + jz @ jz


# Cooper-pair block, basis ordered (|1,1>, |0,0>)
BCS_JZ = np.diag([0.5, -0.5]).astype(np.complex128)
BCS_JP = np.array([[0, 1], [0, 0]], dtype=np.complex128)
BCS_JM = BCS_JP.T.copy()
KET_11 = np.array([1, 0], dtype=np.complex128)
KET_00 = np.array([0, 1], dtype=np.complex128)


@dataclass(frozen=True)
class BcsParams:
    eps_k: float
    delta_k: complex
    theta_k: float
    phi: float
    tau: complex
    big_e: float


@dataclass(frozen=True)
class BcsResult:
    params: BcsParams
    hamiltonian: np.ndarray
    d_matrix: np.ndarray
    diag_residual: float
    coherent: np.ndarray
    ground_state: np.ndarray
    disentangle_residual: float
    display_residual: float
    spectrum_residual: float


def bcs_hamiltonian(eps_k: float, delta_k: complex) -> np.ndarray:
    """eps Jz + (Delta J+ + Delta* J-) / 2, the Hermitian single-mode block."""
    return eps_k * BCS_JZ + 0.5 * delta_k * BCS_JP + 0.5 * np.conj(delta_k) * BCS_JM


def bcs_display(theta: float, phi: float) -> np.ndarray:
    """M[a][b] = <b|D|a> with a, b ordered (|0,0>, |1,1>)."""
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array(
        [[c, s * cmath.exp(-1j * phi)],
         [-s * cmath.exp(1j * phi), c]],
        dtype=np.complex128,
    )


def bcs_diagonalize(eps_k: float, delta_k: complex) -> BcsResult:
    if eps_k <= 0:
        raise ValidationError("eps_k must be positive (theta_k in [0, pi/2) branch)")
    mag = abs(delta_k)
    theta = math.atan2(mag, eps_k)
    phi = -cmath.phase(delta_k) if mag > 0 else 0.0
    big_e = math.hypot(eps_k, mag)
    tau = cmath.exp(-1j * phi) * math.tan(theta / 2)
    params = BcsParams(float(eps_k), complex(delta_k), theta, phi, tau, big_e)

    h = bcs_hamiltonian(eps_k, delta_k)
    xi = (theta / 2) * cmath.exp(-1j * phi)
    dm = cxmat.expm(xi * BCS_JP - xi.conjugate() * BCS_JM)
    diag_res = cxmat.residual(dm @ h @ cxmat.dagger(dm), big_e * BCS_JZ)

    # eigenvalue oracle: +-E/2
    evals = np.linalg.eigvalsh(h)
    spec_res = float(np.abs(evals - np.array([-big_e / 2, big_e / 2])).max())

    disent = (cxmat.expm(tau * BCS_JP)
              @ cxmat.expm(math.log(1 + abs(tau) ** 2) * BCS_JZ)
              @ cxmat.expm(-tau.conjugate() * BCS_JM))
    dis_res = cxmat.residual(dm, disent)

    order = [KET_00, KET_11]
    shown = np.array([[np.vdot(b, dm @ a) for b in order] for a in order], dtype=np.complex128)
    disp_res = cxmat.residual(shown, bcs_display(theta, phi))

    coherent = (KET_00 + tau * KET_11) / math.sqrt(1 + abs(tau) ** 2)
    ground = cxmat.dagger(dm) @ KET_00
    return BcsResult(params, h, dm, diag_res, coherent, ground, dis_res, disp_res, spec_res)


def bcs_as_wigner(theta: float, phi: float) -> np.ndarray:
    """The Cooper-pair D(xi) written through the spin-1/2 D-function."""
    return wigner.big_D(1, -theta, phi)
