import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from l1braid import cxmat
from l1braid.errors import DecompositionError, UnsupportedError, ValidationError
from l1braid.tl_braid import (Root, Tag, TLFamily, TLGen, b_one, b_two, bell_transform,
                              braid_from_tl, f_roots, kauffman_decompose, match_type_one,
                              s_matrix, spin_operator_form, tl_generator, tl_residuals,
                              unitary_s)

SQ2 = math.sqrt(2)
alphas = st.floats(min_value=-math.pi, max_value=math.pi)
signs = st.sampled_from([1, -1])
tags = st.sampled_from(list(Tag))


def test_type_one_generator_at_zero():
    t = tl_generator(TLFamily(Tag.TYPE_I, 0.0, 1))
    ref = np.array([[1, 0, 0, 1], [0, 1, -1j, 0], [0, 1j, 1, 0], [1, 0, 0, 1]]) / SQ2
    assert cxmat.residual(t.matrix, ref) < 1e-15
    assert abs(t.loop_d - SQ2) < 1e-15


def test_type_two_prime_eta_minus_one():
    t = tl_generator(TLFamily(Tag.TYPE_II_PRIME, math.pi))
    m = t.matrix
    assert cxmat.residual(m[1:3, 1:3], np.array([[1, -1], [-1, 1]])) < 1e-15
    assert m[0, 0] == 0 and m[3, 3] == 0
    assert abs(t.loop_d - 2) < 1e-15


def test_tl_residuals_zero_matrix():
    fam = TLFamily(Tag.TYPE_II)
    assert tl_residuals(TLGen(fam, np.zeros((4, 4), dtype=complex), 0.0)) == (0.0, 0.0, 0.0)


@given(tags, alphas, signs)
def test_tl_relations(tag, alpha, eps):
    r = tl_residuals(tl_generator(TLFamily(tag, alpha, eps)))
    assert max(r) < 1e-12


@given(st.floats(min_value=0.3, max_value=3.0), alphas)
def test_q_deformed_tl_relations(q, alpha):
    t = tl_generator(TLFamily(Tag.TYPE_II_PRIME, alpha, q=q))
    assert abs(t.loop_d - (q + 1 / q)) < 1e-12
    assert max(tl_residuals(t)) < 1e-12 * max(1.0, q + 1 / q) ** 2


def test_f_roots():
    assert all(abs(f + 1) < 1e-15 for f in f_roots(2.0))
    p, m = f_roots(SQ2)
    assert abs(p + cmath.exp(-1j * math.pi / 4)) < 1e-15
    assert abs(m + cmath.exp(1j * math.pi / 4)) < 1e-15
    p, m = f_roots(2.5)
    assert abs(p + 0.5) < 1e-15 and abs(m + 2.0) < 1e-15


@given(st.floats(min_value=0.1, max_value=5.0))
def test_f_roots_solve_quadratic(d):
    for f in f_roots(d):
        assert abs(f * f + d * f + 1) < 1e-12


@given(tags, alphas, signs, st.sampled_from(list(Root)))
def test_braid_from_tl(tag, alpha, eps, root):
    assert braid_from_tl(tl_generator(TLFamily(tag, alpha, eps)), root).braid_residual < 1e-12


def test_permutation_limit():
    s = s_matrix(tl_generator(TLFamily(Tag.TYPE_II, math.pi)), Root.PLUS)
    assert np.all(np.isin(np.round(s.real, 12), [0.0, 1.0])) and np.abs(s.imag).max() < 1e-15
    assert cxmat.residual(s @ s, np.eye(4)) < 1e-15


def test_zero_generator_gives_identity():
    fam = TLFamily(Tag.TYPE_II)
    pair = braid_from_tl(TLGen(fam, np.zeros((4, 4), dtype=complex), 2.0))
    assert cxmat.residual(pair.a, np.eye(8)) == 0 and pair.braid_residual == 0


@given(alphas, signs)
def test_type_one_s_is_shifted_b_one(alpha, eps):
    s = s_matrix(tl_generator(TLFamily(Tag.TYPE_I, alpha, eps)), Root.PLUS)
    m = match_type_one(s)
    assert m.residual < 1e-12
    assert abs(m.q - 1j * cmath.exp(1j * alpha)) < 1e-12


@given(alphas, signs)
def test_unitary_s(alpha, eps):
    u = unitary_s(tl_generator(TLFamily(Tag.TYPE_I, alpha, eps)))
    assert cxmat.unitarity_residual(u) < 1e-12


def test_bell_transform():
    w = bell_transform()
    assert cxmat.residual(w[0], np.array([1, 0, 0, 1]) / SQ2) < 1e-15
    assert cxmat.unitarity_residual(w) < 1e-15


@given(st.floats(min_value=-math.pi, max_value=math.pi), signs)
def test_b_one_braids(phase, eps):
    b = b_one(cmath.exp(1j * phase), eps)
    assert cxmat.braid_residual(cxmat.embed_left(b), cxmat.embed_right(b)) < 1e-12


@given(st.floats(min_value=0.3, max_value=3.0), alphas)
def test_b_two_braids(q, phase):
    b = b_two(q, cmath.exp(1j * phase))
    scale = max(1.0, np.abs(b).max()) ** 3
    assert cxmat.braid_residual(cxmat.embed_left(b), cxmat.embed_right(b)) < 1e-12 * scale


def test_kauffman_known_loop_values():
    assert abs(kauffman_decompose(b_two(1, -1)).d - 2) < 1e-12
    assert abs(kauffman_decompose(b_one(1, 1)).d - SQ2) < 1e-12


@given(alphas, signs)
def test_kauffman_reconstructs(alpha, eps):
    s = b_one(cmath.exp(1j * alpha), eps)
    k = kauffman_decompose(s)
    rebuilt = k.rho * (k.alpha * np.eye(4) + k.t / k.alpha)
    assert cxmat.residual(rebuilt, s) < 1e-12
    assert cxmat.residual(k.t @ k.t, k.d * k.t) < 1e-12
    assert abs(k.d + k.alpha ** 2 + k.alpha ** -2) < 1e-12


def test_kauffman_rejects_degenerate():
    with pytest.raises(DecompositionError):
        kauffman_decompose(np.eye(4, dtype=complex))


def test_spin_operator_form_type_two():
    fam = TLFamily(Tag.TYPE_II, 0.0)
    assert cxmat.residual(spin_operator_form(fam), tl_generator(fam).matrix) < 1e-15


@given(alphas, signs)
def test_spin_operator_form_type_one_flips_epsilon(alpha, eps):
    got = spin_operator_form(TLFamily(Tag.TYPE_I, alpha, eps))
    ref = tl_generator(TLFamily(Tag.TYPE_I, alpha, -eps)).matrix
    assert cxmat.residual(got, ref) < 1e-14


def test_spin_operator_form_prime_unsupported():
    with pytest.raises(UnsupportedError):
        spin_operator_form(TLFamily(Tag.TYPE_II_PRIME))


def test_family_validation():
    with pytest.raises(ValidationError):
        TLFamily(Tag.TYPE_I, 0.0, 2)
    with pytest.raises(ValidationError):
        TLFamily(Tag.TYPE_II, 0.0, 1, q=0)
