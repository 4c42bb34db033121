"""Extrema of the row-wise l1 norm of Wigner d-matrices over theta in [-pi, pi]."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import wigner
from .errors import ValidationError
from .report import CheckResult, Report

DEFAULT_SAMPLES = 10001
MERGE_TOL = 1e-7
REFINE_TOL = 1e-9
CANONICAL_THETAS = (-math.pi, -math.pi / 2, 0.0, math.pi / 2, math.pi)
_GOLDEN = (math.sqrt(5.0) - 1) / 2


class Kind(str, Enum):
    MAX = "Max"
    MIN = "Min"


class Signature(str, Enum):
    SPINOR_LIKE = "SpinorLike"
    VECTOR_LIKE = "VectorLike"


@dataclass(frozen=True)
class Extremum:
    theta: float
    value: float
    kind: Kind


@dataclass
class L1Profile:
    two_j: int
    row_m: int  # 2M
    thetas: np.ndarray
    values: np.ndarray
    extrema: list[Extremum] = field(default_factory=list)

    def nearest(self, theta: float) -> Extremum | None:
        if not self.extrema:
            return None
        return min(self.extrema, key=lambda e: abs(e.theta - theta))


def l1_value(two_j: int, row: int, theta: float) -> float:
    return float(np.abs(wigner.little_d_row(two_j, row, [theta])).sum())


def l1_values(two_j: int, row: int, thetas) -> np.ndarray:
    return np.abs(wigner.little_d_row(two_j, row, thetas)).sum(axis=1)


def _golden(f, lo: float, hi: float, maximize: bool) -> float:
    sign = -1.0 if maximize else 1.0
    g = lambda x: sign * f(x)  # noqa: E731
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = g(c), g(d)
    while b - a > REFINE_TOL:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = g(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = g(d)
    x = (a + b) / 2
    # a kink sitting exactly on a bracket end can beat the interior estimate
    return min((a, x, b), key=g)


def l1_profile(two_j, row_m: int, n_samples: int = DEFAULT_SAMPLES) -> L1Profile:
    """Sample f(theta) = sum_M' |d_{M M'}(theta)| and locate its extrema.

    ``row_m`` is 2M. Endpoints use the periodic neighbour on the other side.
    """
    n = wigner._twice(two_j)
    row = wigner.row_index(n, row_m)
    if n_samples < 101 or n_samples % 2 == 0:
        raise ValidationError("n_samples must be odd and at least 101")
    thetas = np.linspace(-math.pi, math.pi, n_samples)
    values = l1_values(n, row, thetas)
    h = thetas[1] - thetas[0]
    f = lambda t: l1_value(n, row, t)  # noqa: E731

    found: list[Extremum] = []
    last = n_samples - 1
    for k in range(n_samples):
        left = values[k - 1] if k > 0 else values[last - 1]
        right = values[k + 1] if k < last else values[1]
        v = values[k]
        if v >= left and v >= right and (v > left or v > right):
            kind = Kind.MAX
        elif v <= left and v <= right and (v < left or v < right):
            kind = Kind.MIN
        else:
            continue
        lo, hi = max(-math.pi, thetas[k] - h), min(math.pi, thetas[k] + h)
        t = _golden(f, lo, hi, kind is Kind.MAX)
        if abs(t - thetas[k]) > h:
            t = float(thetas[k])
        found.append(Extremum(float(t), f(t), kind))

    found.sort(key=lambda e: e.theta)
    merged: list[Extremum] = []
    for e in found:
        if merged and abs(e.theta - merged[-1].theta) < MERGE_TOL and e.kind is merged[-1].kind:
            continue
        merged.append(e)
    return L1Profile(n, row_m, thetas, values, merged)


def _classify_at(profile: L1Profile, theta: float, tol: float = 1e-6) -> Kind | None:
    e = profile.nearest(theta)
    if e is None or abs(e.theta - theta) > tol:
        return None
    return e.kind


def canonical_extrema_check(two_j, n_samples: int = DEFAULT_SAMPLES, tol: float = 1e-6) -> Report:
    """Every row must have extrema at -pi, -pi/2, 0, pi/2, pi.

    The detail string records the Max/Min classification at +-pi/2 and +-pi.
    For 2J >= 4 the classification is informational only.
    """
    n = wigner._twice(two_j)
    checks = []
    for tm in wigner.m_labels(n):
        prof = l1_profile(n, tm, n_samples)
        worst = 0.0
        for t in CANONICAL_THETAS:
            e = prof.nearest(t)
            worst = max(worst, abs(e.theta - t) if e else math.inf)
        kinds = {lab: _classify_at(prof, t, tol) for lab, t in
                 (("-pi/2", -math.pi / 2), ("pi/2", math.pi / 2), ("-pi", -math.pi), ("pi", math.pi))}
        detail = ", ".join(f"{k}:{v.value if v else 'none'}" for k, v in kinds.items())
        checks.append(CheckResult.of(f"l1_extrema.canonical.2J={n}.2M={tm}", worst, tol, detail))
    return Report.build(checks)


def spinor_vector_signature(two_j, n_samples: int = DEFAULT_SAMPLES) -> Signature:
    n = wigner._twice(two_j)
    for tm in wigner.m_labels(n):
        prof = l1_profile(n, tm, n_samples)
        for t in (-math.pi / 2, math.pi / 2):
            if _classify_at(prof, t) is Kind.MIN:
                return Signature.VECTOR_LIKE
    return Signature.SPINOR_LIKE
