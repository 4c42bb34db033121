"""Registry of named invariant checks used by ``l1braid verify``."""

from __future__ import annotations

import cmath
import itertools
import math
from typing import Callable, Iterable

import numpy as np

from . import brm_pipeline, cxmat, l1_extrema, topo_su2, wigner, ybe
from .report import CheckResult
from .tl_braid import (Root, Tag, TLFamily, b_one, b_two, bell_transform,
                       braid_from_tl, kauffman_decompose, tl_generator,
                       tl_residuals)

DEFAULT_SEED = 20240917

CheckFn = Callable[[np.random.Generator], Iterable[CheckResult]]
REGISTRY: dict[str, CheckFn] = {}


def register(name: str):
    def deco(fn: CheckFn) -> CheckFn:
        REGISTRY[name] = fn
        return fn
    return deco


ALPHA_GRID_12 = [2 * math.pi * k / 12 for k in range(12)]
ALPHA_GRID_8 = [2 * math.pi * k / 8 for k in range(8)]


def _tl_families():
    for a in ALPHA_GRID_12:
        for eps in (1, -1):
            yield TLFamily(Tag.TYPE_I, a, eps)
        yield TLFamily(Tag.TYPE_II, a)
        yield TLFamily(Tag.TYPE_II_PRIME, a)


@register("temperley_lieb")
def check_temperley_lieb(rng):
    worst = {Tag.TYPE_I: 0.0, Tag.TYPE_II: 0.0, Tag.TYPE_II_PRIME: 0.0}
    for fam in _tl_families():
        worst[fam.tag] = max(worst[fam.tag], *tl_residuals(tl_generator(fam)))
    for tag, r in worst.items():
        yield CheckResult.of(f"temperley_lieb.{tag.value}", r, 1e-12, "12-point alpha grid")


@register("braid")
def check_braid(rng):
    w = bell_transform()
    yield CheckResult.of("braid.b_I", cxmat.braid_residual(cxmat.embed_left(w), cxmat.embed_right(w)), 1e-12)
    r = 0.0
    for q in (1.0, 0.7, cmath.exp(0.4j)):
        for eta in (1.0, -1.0, cmath.exp(1j * math.pi / 3)):
            m = b_two(q, eta)
            r = max(r, cxmat.braid_residual(cxmat.embed_left(m), cxmat.embed_right(m)))
    yield CheckResult.of("braid.b_II", r, 1e-12)
    for tag in (Tag.TYPE_I, Tag.TYPE_II, Tag.TYPE_II_PRIME):
        for root in Root:
            r = max(braid_from_tl(tl_generator(TLFamily(tag, a)), root).braid_residual
                    for a in ALPHA_GRID_12)
            yield CheckResult.of(f"braid.S_{tag.value}_{root.value}", r, 1e-12)
    yield CheckResult.of("braid.kauffman_b_II_d", abs(kauffman_decompose(b_two(1, -1)).d - 2), 1e-12)
    yield CheckResult.of("braid.kauffman_b_I_d", abs(kauffman_decompose(b_one(1, 1)).d - math.sqrt(2)), 1e-12)


@register("ybe")
def check_ybe(rng):
    grid = np.linspace(-1.2, 1.2, 20)
    yield CheckResult.of("ybe.R4TypeI_lorentz",
                         max(ybe.ybe_grid(ybe.SpectralFamily(ybe.FamilyTag.R4_TYPE_I, alpha=a), grid)
                             for a in (0.0, 0.9)), 1e-10)
    yield CheckResult.of("ybe.R4TypeII_galileo",
                         max(ybe.ybe_grid(ybe.SpectralFamily(ybe.FamilyTag.R4_TYPE_II, eta=e), grid)
                             for e in (1, -1, cmath.exp(1j * math.pi / 3))), 1e-12)
    g2 = np.linspace(-0.9, 0.9, 20)
    yield CheckResult.of("ybe.2d_TypeI_lorentz",
                         max(ybe.ybe_grid(ybe.SpectralFamily(ybe.FamilyTag.A2_TYPE_I, epsilon=e, beta=b), g2)
                             for e in (1, -1) for b in (1.0, 0.6)), 1e-10)
    g3 = np.linspace(-0.45, 0.45, 20)
    yield CheckResult.of("ybe.2d_TypeII_galileo",
                         max(ybe.ybe_grid(ybe.SpectralFamily(ybe.FamilyTag.A2_TYPE_II, gamma=g, epsilon=e), g3)
                             for g in (1, 2 + 1j) for e in (1, -1)), 1e-12)
    for g in (1, 2 + 1j):
        yield CheckResult.of(f"ybe.G_constraint_gamma={g}", ybe.verify_G_constraint(g, 5), 1e-13)


@register("wigner")
def check_wigner(rng):
    thetas = np.linspace(-math.pi, math.pi, 100)
    r = max(cxmat.residual(wigner.little_d(n, t), wigner.little_d_closed(n, t))
            for n in (1, 2, 3) for t in thetas)
    yield CheckResult.of("wigner.closed_form", r, 1e-13)
    r = 0.0
    for n in range(1, 9):
        for t, p in rng.uniform(-math.pi, math.pi, size=(50, 2)):
            r = max(r, cxmat.unitarity_residual(wigner.big_D(n, t, p)))
    yield CheckResult.of("wigner.unitarity", r, 1e-12)
    h = 1e-5
    r = 0.0
    for n in range(1, 9):
        for t in np.linspace(-3.0, 3.0, 13):
            fd = (wigner.little_d(n, t + h) - wigner.little_d(n, t - h)) / (2 * h)
            r = max(r, cxmat.residual(fd, wigner.little_d_derivative(n, t)))
    yield CheckResult.of("wigner.derivative", r, 1e-6)
    r = max(cxmat.residual(wigner.big_D(n, t, p), wigner.big_D_exp(n, t, p))
            for n in range(1, 9) for t, p in rng.uniform(-math.pi, math.pi, size=(5, 2)))
    yield CheckResult.of("wigner.exp_generator", r, 1e-12)


@register("d_symmetry")
def check_d_symmetry(rng):
    v = d = 0.0
    for n in range(1, 9):
        for a in range(n + 1):
            rv, rd = wigner.symmetry_half_pi(n, a)
            v, d = max(v, rv), max(d, rd)
    yield CheckResult.of("d_symmetry.half_pi_value", v, 1e-12)
    yield CheckResult.of("d_symmetry.half_pi_derivative", d, 1e-12)
    yield CheckResult.of("d_symmetry.pi_sparsity", max(wigner.pi_sparsity(n) for n in range(1, 9)), 1e-13)


def _value_at(profile, theta, kind):
    e = profile.nearest(theta)
    if e is None or abs(e.theta - theta) > 1e-6 or e.kind is not kind:
        return math.inf
    return e.value


@register("l1_extrema")
def check_l1(rng):
    for n in (1, 2, 3):
        rep = l1_extrema.canonical_extrema_check(n)
        yield from rep.checks
    p = l1_extrema.l1_profile(1, 1)
    r = max(abs(_value_at(p, t, l1_extrema.Kind.MAX) - math.sqrt(2)) for t in (-math.pi / 2, math.pi / 2))
    r = max(r, *(abs(_value_at(p, t, l1_extrema.Kind.MIN) - 1) for t in (-math.pi, 0.0, math.pi)))
    yield CheckResult.of("l1_extrema.values.2J=1.2M=1", r, 1e-9)
    r = 0.0
    for tm in (2, -2):
        p = l1_extrema.l1_profile(2, tm)
        r = max(r, *(abs(_value_at(p, t, l1_extrema.Kind.MAX) - (1 + 1 / math.sqrt(2)))
                     for t in (-math.pi / 2, math.pi / 2)))
    yield CheckResult.of("l1_extrema.values.2J=2.2M=+-2", r, 1e-9)
    p = l1_extrema.l1_profile(2, 0)
    r = max(abs(_value_at(p, t, l1_extrema.Kind.MIN) - math.sqrt(2)) for t in (-math.pi / 2, math.pi / 2))
    at = math.atan(math.sqrt(2))
    r = max(r, *(abs(_value_at(p, t, l1_extrema.Kind.MAX) - math.sqrt(3))
                 for t in (-at, at, math.pi - at, at - math.pi)))
    yield CheckResult.of("l1_extrema.values.2J=2.2M=0", r, 1e-9)


@register("brm")
def check_brm(rng):
    for n in (1, 2, 3):
        for tag in brm_pipeline.BrmTag:
            d = brm_pipeline.canonical_brm(n, tag)
            yield CheckResult.of(f"brm.canonical.2J={n}.{tag.value}.match", d.paper_match_residual, 1e-12)
            yield CheckResult.of(f"brm.canonical.2J={n}.{tag.value}.braid", d.braid_residual, 1e-12)
    for tag in brm_pipeline.BrmTag:
        yield CheckResult.of(f"brm.ybe_2d.{tag.value}",
                             max(brm_pipeline.ybe_2d_check(tag, t1, t3)
                                 for t1, t3 in itertools.product(np.linspace(-1.2, 1.2, 9), repeat=2)),
                             1e-12)
    r = brm_pipeline.r4_from_d(-math.pi / 4, math.pi / 2)
    yield CheckResult.of("brm.r4_half_angle_braid",
                         cxmat.braid_residual(cxmat.embed_left(r), cxmat.embed_right(r)), 1e-12)


@register("constraint_curve")
def check_constraint_curve(rng):
    r = max(brm_pipeline.brm_pair(1, t, s).braid_residual
            for t in brm_pipeline.constraint_curve(200) for s in (1, -1))
    yield CheckResult.of("constraint_curve.spin_half", r, 1e-12, "200 points, both phi signs")


@register("topo")
def check_topo(rng):
    for tag in (Tag.TYPE_I, Tag.TYPE_II):
        tl = orth = act = su2 = 0.0
        for a in ALPHA_GRID_8:
            fam = TLFamily(tag, a)
            ops = [topo_su2.tl_site_operator(fam, i, j) for i, j in topo_su2.ADJACENT]
            d = math.sqrt(2) if tag is Tag.TYPE_I else 2.0
            for k, t in enumerate(ops):
                u = ops[(k + 1) % 4]
                tl = max(tl, cxmat.residual(t @ t, d * t), cxmat.residual(t @ u @ t, t),
                         cxmat.residual(u @ t @ u, u))
            for eps in (1, -1):
                b = topo_su2.topo_basis(fam, eps)
                orth = max(orth, abs(np.vdot(b.e1, b.e1) - 1), abs(np.vdot(b.e2, b.e2) - 1),
                           abs(np.vdot(b.e1, b.e2)))
                t12, t23 = topo_su2.tl_action_2d(b)
                x12, x23 = topo_su2.expected_tl_action(d, eps)
                act = max(act, cxmat.residual(t12, x12), cxmat.residual(t23, x23))
                jp, jm, jz = topo_su2.su2_generators(b)
                e1p, e2p = topo_su2.rotated_basis(b)
                cas = topo_su2.casimir(jp, jm, jz)
                su2 = max(su2,
                          cxmat.residual(cxmat.commutator(jz, jp), jp),
                          cxmat.residual(cxmat.commutator(jz, jm), -jm),
                          cxmat.residual(cxmat.commutator(jp, jm), 2 * jz),
                          float(np.abs(jp @ jp).max()), float(np.abs(jm @ jm).max()),
                          float(np.abs(cas @ e1p - 0.75 * e1p).max()),
                          float(np.abs(cas @ e2p - 0.75 * e2p).max()))
        yield CheckResult.of(f"topo.{tag.value}.tl_relations", tl, 1e-12)
        yield CheckResult.of(f"topo.{tag.value}.orthonormal", orth, 1e-12)
        yield CheckResult.of(f"topo.{tag.value}.tl_action_2d", act, 1e-12)
        yield CheckResult.of(f"topo.{tag.value}.su2", su2, 1e-12)
    p = topo_su2.ab_from_alpha(cmath.exp(3j * math.pi / 8), math.sqrt(2))
    ref_a = np.diag([1, 1j])
    ref_b = np.array([[1, -1j], [-1j, 1]]) / math.sqrt(2)
    ra = cxmat.residual(p.a, cmath.exp(-1j * math.pi / 8) * ref_a)
    rb = cxmat.residual(p.b, cmath.exp(1j * math.pi / 8) * ref_b)
    yield CheckResult.of("topo.ab_type_I", max(ra, rb, p.braid_residual), 1e-12)
    p = topo_su2.ab_from_alpha(1j, 2.0)
    ref_a = np.diag([-1, 1])
    ref_b = -0.5 * np.array([[1, -math.sqrt(3)], [-math.sqrt(3), -1]])
    ra = cxmat.residual(p.a, brm_pipeline.fit_phase(p.a, ref_a) * ref_a)
    rb = cxmat.residual(p.b, brm_pipeline.fit_phase(p.b, ref_b) * ref_b)
    yield CheckResult.of("topo.ab_type_II", max(ra, rb, p.braid_residual), 1e-12,
                         "unit phase fitted per matrix")


@register("bcs")
def check_bcs(rng):
    diag = rel = dis = disp = 0.0
    for _ in range(20):
        eps = rng.uniform(0.1, 5.0)
        delta = rng.uniform(0.1, 5.0) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        r = topo_su2.bcs_diagonalize(eps, delta)
        diag = max(diag, r.diag_residual, r.spectrum_residual)
        rel = max(rel, abs(r.params.big_e - math.sqrt(eps ** 2 + abs(delta) ** 2)) / r.params.big_e)
        dis = max(dis, r.disentangle_residual)
        disp = max(disp, r.display_residual)
    yield CheckResult.of("bcs.diag_residual", diag, 1e-12, "20 seeded samples")
    yield CheckResult.of("bcs.energy_relative", rel, 1e-12)
    yield CheckResult.of("bcs.disentangling", dis, 1e-10)
    yield CheckResult.of("bcs.display_matrix", disp, 1e-12)


def run_checks(filter_text: str | None = None, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    out: list[CheckResult] = []
    for name, fn in REGISTRY.items():
        rng = np.random.default_rng(seed)
        results = list(fn(rng))
        if filter_text:
            results = [c for c in results if filter_text in c.name or filter_text in name]
        out.extend(results)
    return out
