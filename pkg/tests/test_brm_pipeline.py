import cmath
import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from l1braid import brm_pipeline as bp
from l1braid import cxmat, wigner
from l1braid.brm_pipeline import BrmTag, BrmType, Convention
from l1braid.errors import (NoBraidSolutionError, SingularityError, UnsupportedError,
                            ValidationError)
from l1braid.tl_braid import BraidPair

SQ2, SQ3 = math.sqrt(2), math.sqrt(3)
V = np.array([[1, 1j], [1j, 1]]) / SQ2


def test_phi_from_theta():
    assert bp.phi_from_theta(math.pi) == pytest.approx(2 * math.pi / 3, abs=1e-15)
    assert bp.phi_from_theta(math.pi / 2) == pytest.approx(math.pi / 2, abs=1e-15)
    assert bp.phi_from_theta(-math.pi / 2) == pytest.approx(math.pi / 2, abs=1e-15)
    with pytest.raises(NoBraidSolutionError):
        bp.phi_from_theta(math.pi / 4)
    with pytest.raises(SingularityError):
        bp.phi_from_theta(0.0)


def test_brm_type_validation():
    BrmType(BrmTag.TYPE_II, math.pi, 2 * math.pi / 3)
    with pytest.raises(ValidationError):
        BrmType(BrmTag.TYPE_I, math.pi / 2, 0.3)


def test_conjugate_identity():
    p = bp.brm_pair(1, math.pi / 2)
    q = bp.conjugate_pair(p, np.eye(2), Convention.U_X_UDAG)
    assert cxmat.residual(p.a, q.a) == 0 and cxmat.residual(p.b, q.b) == 0
    with pytest.raises(ValidationError):
        bp.conjugate_pair(p, 2 * np.eye(2), Convention.U_X_UDAG)
    with pytest.raises(ValidationError):
        bp.conjugate_pair(p, np.eye(3), Convention.U_X_UDAG)


def test_spin_half_type_one_conjugation():
    d = bp.canonical_brm(1, BrmTag.TYPE_I)
    assert cxmat.residual(d.a_tilde, cmath.exp(-1j * math.pi / 4) * np.diag([1, 1j])) < 1e-12
    direct = bp.conjugate_pair(BraidPair.of(d.a, d.b), V, "UXUdag")
    assert cxmat.residual(direct.a, d.a_tilde) < 1e-15


def test_spin_half_type_two_conjugation():
    d = bp.canonical_brm(1, BrmTag.TYPE_II)
    ref_b = (-0.5j) * np.array([[1, -SQ3], [-SQ3, -1]])
    assert cxmat.residual(d.b_tilde, ref_b) < 1e-12
    assert cxmat.residual(d.a_tilde, -1j * np.diag([-1, 1])) < 1e-12
    assert abs(d.overall_phase + 1j) < 1e-12


def test_spin_one_type_one():
    d = bp.canonical_brm(2, BrmTag.TYPE_I)
    assert cxmat.residual(d.a_tilde, np.diag([-1j, 1, 1j])) < 1e-12
    ref_b = np.array([[0.5, 1 / SQ2, 0.5], [-1 / SQ2, 0, 1 / SQ2], [0.5, -1 / SQ2, 0.5]])
    assert cxmat.residual(d.b_tilde, ref_b) < 1e-12


def test_spin_three_half_type_two():
    d = bp.canonical_brm(3, BrmTag.TYPE_II)
    assert cxmat.residual(d.a_tilde, np.diag([1j, 1j, -1j, -1j])) < 1e-12
    off = d.a.copy()
    for k in range(4):
        off[k, 3 - k] = 0
    assert np.abs(off).max() < 1e-15


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("tag", list(BrmTag))
def test_all_canonical_pairs(n, tag):
    d = bp.canonical_brm(n, tag)
    assert d.paper_match_residual < 1e-12
    assert d.braid_residual < 1e-12
    assert abs(abs(d.overall_phase) - 1) < 1e-15 and abs(abs(d.b_phase) - 1) < 1e-15


def test_canonical_unsupported():
    with pytest.raises(UnsupportedError):
        bp.canonical_brm(4, BrmTag.TYPE_I)


def test_json_round_trip():
    d = bp.canonical_brm(2, BrmTag.TYPE_II)
    doc = json.loads(d.to_json())
    for key in ("theta_star", "phi_star", "A", "B", "conjugator", "A_tilde", "B_tilde",
                "braid_residual", "paper_match_residual", "overall_phase"):
        assert key in doc
    assert cxmat.residual(bp.matrix_from_json(doc["B_tilde"]), d.b_tilde) == 0


@given(st.sampled_from(list(bp.constraint_curve(200))), st.sampled_from([1, -1]))
def test_constraint_curve_spin_half(theta, sign):
    assert bp.brm_pair(1, theta, sign).braid_residual < 1e-12


def test_constraint_curve_sampling():
    c = bp.constraint_curve(200)
    assert len(c) == 200
    assert np.all(np.abs(c) >= math.pi / 3 - 1e-15) and np.all(np.abs(c) <= math.pi + 1e-15)


@given(st.floats(min_value=-1.2, max_value=1.2), st.floats(min_value=-1.2, max_value=1.2),
       st.sampled_from(list(BrmTag)))
def test_ybe_2d(t1, t3, tag):
    assert bp.ybe_2d_check(tag, t1, t3) < 1e-12


def test_ybe_2d_examples():
    for tag in BrmTag:
        assert bp.ybe_2d_check(tag, 0.4, 0.6) < 1e-12
        assert bp.ybe_2d_check(tag, 0.0, 0.0) < 1e-15


@given(st.floats(min_value=-math.pi, max_value=math.pi), st.floats(min_value=-math.pi, max_value=math.pi))
def test_b_prime_closed_form(theta, phi):
    from l1braid import ybe
    assert cxmat.residual(bp.b_prime_closed(theta, phi), ybe.b_prime(theta, phi)) < 1e-14


def test_r4_half_angle_braid():
    r = bp.r4_from_d(-math.pi / 4, math.pi / 2)
    assert cxmat.braid_residual(cxmat.embed_left(r), cxmat.embed_right(r)) < 1e-12


def test_canonical_angles():
    assert BrmType.canonical("TypeI", 1).theta_star == -math.pi / 2
    assert BrmType.canonical("TypeI", 2).theta_star == math.pi / 2
    t = BrmType.canonical("TypeII", 3)
    assert t.theta_star == math.pi and t.phi_star == pytest.approx(2 * math.pi / 3)
    assert wigner.little_d(1, t.theta_star).shape == (2, 2)
