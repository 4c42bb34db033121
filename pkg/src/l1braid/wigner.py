"""Wigner d^J and D^J matrices for half-integer J.

Rows and columns run over M = J, J-1, ..., -J. Spins are passed around as
``two_j`` (an int equal to 2J) or as a ``HalfInt``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import cxmat
from .errors import UnsupportedError, ValidationError

MAX_TWO_J = 20


@dataclass(frozen=True, order=True)
class HalfInt:
    twice: int

    @property
    def value(self) -> float:
        return self.twice / 2

    def __str__(self) -> str:
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"


@dataclass(frozen=True)
class WignerSpec:
    two_j: HalfInt
    theta: float
    phi: float = 0.0

    def __post_init__(self):
        _twice(self.two_j)


def _twice(j) -> int:
    n = j.twice if isinstance(j, HalfInt) else int(j)
    if n < 1:
        raise ValidationError(f"2J must be >= 1, got {n}")
    if n > MAX_TWO_J:
        raise ValidationError(f"2J is capped at {MAX_TWO_J}, got {n}")
    return n


def m_labels(two_j) -> list[int]:
    """2M for each row, descending."""
    n = _twice(two_j)
    return list(range(n, -n - 1, -2))


def row_index(two_j, two_m: int) -> int:
    n = _twice(two_j)
    if abs(two_m) > n or (n - two_m) % 2:
        raise ValidationError(f"2M={two_m} is not a valid label for 2J={n}")
    return (n - two_m) // 2


def _chi_range(n: int, tm: int, tmp: int) -> range:
    # negative-factorial convention: every factorial argument stays >= 0
    lo = max(0, (tmp - tm) // 2)
    hi = min((n - tm) // 2, (n + tmp) // 2)
    return range(lo, hi + 1)


def _terms(n: int, tm: int, tmp: int):
    """Yield (coefficient, cos power, sin power) with signs folded in."""
    f = math.factorial
    jpm, jmm = (n + tm) // 2, (n - tm) // 2
    jpmp, jmmp = (n + tmp) // 2, (n - tmp) // 2
    pref = math.sqrt(f(jpm) * f(jmm) * f(jpmp) * f(jmmp))
    dm = (tm - tmp) // 2
    for chi in _chi_range(n, tm, tmp):
        denom = f(jmm - chi) * f(jpmp - chi) * f(chi + dm) * f(chi)
        sp = dm + 2 * chi
        sign = -1 if (chi + sp) % 2 else 1
        yield sign * pref / denom, n - dm - 2 * chi, sp


def little_d(two_j, theta: float) -> np.ndarray:
    n = _twice(two_j)
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    labels = m_labels(n)
    out = np.zeros((n + 1, n + 1), dtype=np.complex128)
    for i, tm in enumerate(labels):
        for k, tmp in enumerate(labels):
            out[i, k] = sum(coef * c ** pc * s ** ps for coef, pc, ps in _terms(n, tm, tmp))
    return out


def little_d_row(two_j, row: int, thetas) -> np.ndarray:
    """Row ``row`` of d^J at every theta in ``thetas``; shape (len(thetas), 2J+1), real."""
    n = _twice(two_j)
    t = np.asarray(thetas, dtype=float)
    c, s = np.cos(t / 2), np.sin(t / 2)
    labels = m_labels(n)
    tm = labels[row]
    out = np.zeros((t.size, n + 1))
    for k, tmp in enumerate(labels):
        for coef, pc, ps in _terms(n, tm, tmp):
            out[:, k] += coef * c ** pc * s ** ps
    return out


def little_d_derivative(two_j, theta: float) -> np.ndarray:
    n = _twice(two_j)
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    labels = m_labels(n)
    out = np.zeros((n + 1, n + 1), dtype=np.complex128)
    for i, tm in enumerate(labels):
        for k, tmp in enumerate(labels):
            total = 0.0
            for coef, pc, ps in _terms(n, tm, tmp):
                # d/dtheta c^p s^q = (q c^{p+1} s^{q-1} - p c^{p-1} s^{q+1}) / 2
                if ps:
                    total += coef * ps * c ** (pc + 1) * s ** (ps - 1) / 2
                if pc:
                    total -= coef * pc * c ** (pc - 1) * s ** (ps + 1) / 2
            out[i, k] = total
    return out


def phase_mask(two_j, phi: float) -> np.ndarray:
    """Entrywise factor e^{i phi (M' - M)}."""
    labels = m_labels(two_j)
    return np.array(
        [[cmath.exp(1j * phi * (tmp - tm) / 2) for tmp in labels] for tm in labels],
        dtype=np.complex128,
    )


def big_D(spec_or_two_j, theta: float | None = None, phi: float = 0.0) -> np.ndarray:
    """D^J(theta, phi) = e^{i phi (M' - M)} d^J(theta), entrywise.

    Accepts either a WignerSpec or (two_j, theta, phi).
    """
    if isinstance(spec_or_two_j, WignerSpec):
        two_j, theta, phi = spec_or_two_j.two_j, spec_or_two_j.theta, spec_or_two_j.phi
    else:
        two_j = spec_or_two_j
    return cxmat.hadamard(little_d(two_j, theta), phase_mask(two_j, phi))


def spin_matrices(two_j) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(J+, J-, Jz) in the descending-M basis."""
    n = _twice(two_j)
    labels = m_labels(n)
    jp = np.zeros((n + 1, n + 1), dtype=np.complex128)
    for i in range(1, n + 1):
        tm = labels[i]
        # <m+1|J+|m> = sqrt(J(J+1) - m(m+1)), in units of 1/2 for the labels
        jp[i - 1, i] = math.sqrt((n * (n + 2) - tm * (tm + 2)) / 4)
    jz = np.diag([tm / 2 for tm in labels]).astype(np.complex128)
    return jp, cxmat.dagger(jp), jz


def big_D_exp(two_j, theta: float, phi: float = 0.0) -> np.ndarray:
    """D^J as exp(zeta J+ - zeta* J-) with zeta = -(theta/2) e^{-i phi}."""
    jp, jm, _ = spin_matrices(two_j)
    zeta = -(theta / 2) * cmath.exp(-1j * phi)
    return cxmat.expm(zeta * jp - zeta.conjugate() * jm)


def little_d_closed(two_j, theta: float) -> np.ndarray:
    n = two_j.twice if isinstance(two_j, HalfInt) else int(two_j)
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    r3 = math.sqrt(3.0)
    if n == 1:
        rows = [[c, -s], [s, c]]
    elif n == 2:
        ct, st, r2 = math.cos(theta), math.sin(theta), math.sqrt(2.0)
        rows = [
            [(1 + ct) / 2, -st / r2, (1 - ct) / 2],
            [st / r2, ct, -st / r2],
            [(1 - ct) / 2, st / r2, (1 + ct) / 2],
        ]
    elif n == 3:
        rows = [
            [c ** 3, -r3 * s * c * c, r3 * s * s * c, -s ** 3],
            [r3 * s * c * c, c * (3 * c * c - 2), s * (3 * s * s - 2), r3 * s * s * c],
            [r3 * s * s * c, -s * (3 * s * s - 2), c * (3 * c * c - 2), -r3 * s * c * c],
            [s ** 3, r3 * s * s * c, r3 * s * c * c, c ** 3],
        ]
    else:
        raise UnsupportedError(f"closed forms exist for 2J in {{1,2,3}}, got {n}")
    return np.array(rows, dtype=np.complex128)


def symmetry_half_pi(two_j, a: int) -> tuple[float, float]:
    """Residuals of the pi/2 mirror relations for row M = J - a.

    value:      d_{M,M'} = s (-1)^{2M'} d_{M,-M'}
    derivative: d'_{M,M'} = -s (-1)^{2M'} d'_{M,-M'}
    with s = (-1)^a, everything at theta = pi/2.
    """
    n = _twice(two_j)
    if not 0 <= a <= n:
        raise ValidationError(f"a must lie in [0, {n}], got {a}")
    d = little_d(n, math.pi / 2)
    dd = little_d_derivative(n, math.pi / 2)
    s = -1 if a % 2 else 1
    par = -1 if n % 2 else 1  # (-1)^{2M'} is the same for every column
    row = a
    v_res = max(abs(d[row, k] - s * par * d[row, n - k]) for k in range(n + 1))
    d_res = max(abs(dd[row, k] + s * par * dd[row, n - k]) for k in range(n + 1))
    return float(v_res), float(d_res)


def pi_sparsity(two_j) -> float:
    """Largest |d(pi)| entry off the anti-diagonal."""
    n = _twice(two_j)
    d = little_d(n, math.pi)
    mask = np.ones_like(d, dtype=bool)
    for i in range(n + 1):
        mask[i, n - i] = False
    return float(np.abs(d[mask]).max()) if mask.any() else 0.0
