import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from l1braid import l1_extrema as lx
from l1braid import wigner
from l1braid.errors import ValidationError
from l1braid.l1_extrema import Kind, Signature

SQ2, SQ3 = math.sqrt(2), math.sqrt(3)
HALF_PI = math.pi / 2


def at(profile, theta):
    e = profile.nearest(theta)
    assert e is not None and abs(e.theta - theta) < 1e-6, (theta, e)
    return e


def test_spin_half_profile():
    p = lx.l1_profile(1, 1)
    expected = [(-math.pi, 1, Kind.MIN), (-HALF_PI, SQ2, Kind.MAX), (0.0, 1, Kind.MIN),
                (HALF_PI, SQ2, Kind.MAX), (math.pi, 1, Kind.MIN)]
    assert len(p.extrema) == 5
    for t, v, k in expected:
        e = at(p, t)
        assert e.kind is k and abs(e.value - v) < 1e-9


@pytest.mark.parametrize("tm", [2, -2])
def test_spin_one_edge_rows(tm):
    p = lx.l1_profile(2, tm)
    assert np.abs(p.values - (1 + np.abs(np.sin(p.thetas)) / SQ2)).max() < 1e-14
    for t in (-HALF_PI, HALF_PI):
        e = at(p, t)
        assert e.kind is Kind.MAX and abs(e.value - (1 + 1 / SQ2)) < 1e-9
    for t in (-math.pi, 0.0, math.pi):
        e = at(p, t)
        assert e.kind is Kind.MIN and abs(e.value - 1) < 1e-9


def test_spin_one_middle_row():
    p = lx.l1_profile(2, 0)
    for t in (-HALF_PI, HALF_PI):
        e = at(p, t)
        assert e.kind is Kind.MIN and abs(e.value - SQ2) < 1e-9
    a = math.atan(SQ2)
    for t in (a, -a, math.pi - a, a - math.pi):
        e = at(p, t)
        assert e.kind is Kind.MAX and abs(e.value - SQ3) < 1e-9
    assert abs(max(e.value for e in p.extrema) - SQ3) < 1e-9


@pytest.mark.parametrize("n", [1, 2, 3])
def test_canonical_points_present(n):
    rep = lx.canonical_extrema_check(n)
    assert rep.all_passed and len(rep.checks) == n + 1


def test_spin_three_half_edge_rows():
    for tm in (3, -3):
        p = lx.l1_profile(3, tm)
        assert at(p, HALF_PI).kind is Kind.MAX and at(p, -HALF_PI).kind is Kind.MAX
        assert at(p, math.pi).kind is Kind.MIN and at(p, -math.pi).kind is Kind.MIN


def test_signatures():
    assert lx.spinor_vector_signature(1) is Signature.SPINOR_LIKE
    assert lx.spinor_vector_signature(2) is Signature.VECTOR_LIKE
    assert lx.spinor_vector_signature(3) is Signature.SPINOR_LIKE


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_profile_invariants(n):
    for tm in wigner.m_labels(n):
        p = lx.l1_profile(n, tm, 2001)
        assert np.all(p.values >= 1 - 1e-12) and np.all(p.values <= math.sqrt(n + 1) + 1e-12)
        for e in p.extrema:
            assert abs(e.value - lx.l1_value(n, wigner.row_index(n, tm), e.theta)) < 1e-14
            mirror = p.nearest(-e.theta)
            assert abs(mirror.theta + e.theta) < 1e-6 and abs(mirror.value - e.value) < 1e-9


@pytest.mark.parametrize("n,tm", [(1, 1), (2, 0), (3, 1)])
def test_refinement_stability(n, tm):
    coarse = lx.l1_profile(n, tm, 5001)
    fine = lx.l1_profile(n, tm, 10001)
    assert len(coarse.extrema) == len(fine.extrema)
    for a, b in zip(coarse.extrema, fine.extrema):
        assert abs(a.theta - b.theta) < 1e-6 and a.kind is b.kind


@given(st.integers(min_value=1, max_value=6), st.floats(min_value=-math.pi, max_value=math.pi))
def test_value_independent_of_phi(n, theta):
    for r in range(n + 1):
        via_d = np.abs(wigner.big_D(n, theta, 1.234)[r]).sum()
        assert abs(via_d - lx.l1_value(n, r, theta)) < 1e-13


def test_sample_validation():
    with pytest.raises(ValidationError):
        lx.l1_profile(1, 1, 100)
    with pytest.raises(ValidationError):
        lx.l1_profile(1, 0)
