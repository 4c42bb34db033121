"""Small dense complex matrices.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Everything in the
package is at most 16x16, so the helpers here favour clarity over speed.
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeError

DEFAULT_TOL = 1e-12

_EXPM_DEGREE = 18
_EXPM_SCALE_TARGET = 0.5


def cmatrix(data) -> np.ndarray:
    """Coerce ``data`` into a finite 2-D complex array."""
    a = np.array(data, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise ShapeError(f"expected a non-empty 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def mul(*factors: np.ndarray) -> np.ndarray:
    """Left-to-right product of several matrices."""
    out = factors[0]
    for f in factors[1:]:
        out = matmul(out, f)
    return out


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # (a x b)[i*p + k, j*q + l] = a[i, j] * b[k, l]
    p, q = b.shape
    out = np.empty((a.shape[0] * p, a.shape[1] * q), dtype=np.complex128)
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            out[i * p:(i + 1) * p, j * q:(j + 1) * q] = a[i, j] * b
    return out


def hadamard(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != b.shape:
        raise ShapeError(f"entrywise product needs equal shapes, got {a.shape} and {b.shape}")
    return a * b


def expm(a: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling and squaring a degree-18 Taylor series."""
    n, m = a.shape
    if n != m:
        raise ShapeError(f"expm needs a square matrix, got {a.shape}")
    norm = np.abs(a).sum(axis=0).max()
    s = 0
    if norm > _EXPM_SCALE_TARGET:
        s = int(np.ceil(np.log2(norm / _EXPM_SCALE_TARGET)))
    x = a / (2.0 ** s)
    term = identity(n)
    total = identity(n)
    for k in range(1, _EXPM_DEGREE + 1):
        term = term @ x / k
        total = total + term
    for _ in range(s):
        total = total @ total
    return total


def residual(a: np.ndarray, b: np.ndarray) -> float:
    """Max-abs-entry distance between two matrices of equal shape."""
    if a.shape != b.shape:
        raise ShapeError(f"residual needs equal shapes, got {a.shape} and {b.shape}")
    return float(np.abs(a - b).max())


def unitarity_residual(a: np.ndarray) -> float:
    return residual(a @ dagger(a), identity(a.shape[0]))


def is_unitary(a: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return a.shape[0] == a.shape[1] and unitarity_residual(a) <= tol


def braid_residual(a: np.ndarray, b: np.ndarray) -> float:
    """max|ABA - BAB|."""
    return residual(a @ b @ a, b @ a @ b)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def embed_left(m: np.ndarray, extra: int = 2) -> np.ndarray:
    """m acting on sites (1,2) of three sites: m (x) I."""
    return kron(m, identity(extra))


def embed_right(m: np.ndarray, extra: int = 2) -> np.ndarray:
    """m acting on sites (2,3) of three sites: I (x) m."""
    return kron(identity(extra), m)
