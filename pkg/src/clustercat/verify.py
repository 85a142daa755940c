"""Invariant suites over one quiver; each returns a :class:`Check`."""

from __future__ import annotations

import itertools

from .algebras import module_reps, orbit_endomorphism_algebra, trivial_extension_model
from .cluster import cluster_category, k0_quotient
from .derived import DerivedObject
from .orbit_functors import (
    equivalence_invariants,
    verify_boundary_images,
    verify_inverse,
    verify_gamma_commutes,
    verify_dim_commutes,
)
from .quiver import ValuedQuiver, apply_matrix, euler_form, is_sink, is_source, projective_dims
from .rep import build_projective, reflect
from .report import Check
from .roots import almost_positive_roots, enumerate_positive_roots, simple_reflection, simple_root, truncated_reflection


def check_roots(q: ValuedQuiver) -> list[Check]:
    c = q.cartan
    pos = set(enumerate_positive_roots(c))
    inv = Check("truncated-reflection-involution")
    perm = Check("simple-reflection-permutes-positive-roots")
    for k in q.vertices:
        for a in almost_positive_roots(c):
            inv.checked += 1
            if truncated_reflection(k, truncated_reflection(k, a, c), c) != a:
                inv.fail(k=k, root=str(a))
        ak = simple_root(k, q.n)
        image = {simple_reflection(k, v, c) for v in pos - {ak}}
        perm.checked += 1
        if image != pos - {ak} or simple_reflection(k, ak, c) != tuple(-x for x in ak):
            perm.fail(k=k)
    return [inv, perm]


def check_modules(q: ValuedQuiver) -> list[Check]:
    cc = cluster_category(q)
    cat = cc.model.catalog
    euler = Check("euler-form-identity")
    serre = Check("auslander-reiten-formula")
    endo = Check("indecomposables-have-scalar-endomorphisms")
    cox = Check("coxeter-matrix-calibration")
    proj = Check("projective-dimension-vectors")
    bgp = Check("reflection-dimension-formula")
    pdims = projective_dims(q)
    for i in q.vertices:
        proj.checked += 1
        if build_projective(q, i).dims != pdims[i]:
            proj.fail(vertex=i)
    for x in cat.keys():
        endo.checked += 1
        if cat.dims(x, x) != (1, 0):
            endo.fail(object=x, dims=cat.dims(x, x))
        t = cat.tau[x]
        if t is not None:
            cox.checked += 1
            if apply_matrix(cc.model.coxeter, x) != t:
                cox.fail(object=x, tau=t)
        for y in cat.keys():
            h, e = cat.dims(x, y)
            euler.checked += 1
            if h - e != euler_form(q, x, y):
                euler.fail(pair=[x, y], hom=h, ext=e)
            serre.checked += 1
            want = 0 if t is None else cat.hom_dim(y, t)
            if e != want:
                serre.fail(pair=[x, y], ext=e, hom_to_tau=want)
    for k in q.vertices:
        if not is_sink(q, k):
            continue
        ek = simple_root(k, q.n)
        for x in cat.keys():
            if x == ek:
                continue
            bgp.checked += 1
            d = reflect(k, 1, cat[x]).dims
            if d != simple_reflection(k, x, q.cartan):
                bgp.fail(k=k, object=x, dims=d)
    return [proj, endo, euler, serre, cox, bgp]


def check_derived(q: ValuedQuiver) -> list[Check]:
    model = cluster_category(q).model
    serre = Check("serre-duality-dimensions")
    autos = Check("automorphism-relations")
    for a in model.roots:
        x = DerivedObject(a)
        autos.checked += 1
        if model.tau(model.tau_inv(x)) != x or model.F(model.F_inv(x)) != x or model.F(x) != model.tau_inv(x.shifted(1)):
            autos.fail(object=str(x))
        for b in model.roots:
            y = DerivedObject(b)
            serre.checked += 1
            lhs = model.hom_dim(x, model.tau(y).shifted(1))
            if lhs != model.hom_dim(y, x):
                serre.fail(pair=[str(x), str(y)])
    return [serre, autos]


def check_cluster(q: ValuedQuiver, algebras: bool = True) -> list[Check]:
    cc = cluster_category(q)
    sym = Check("cluster-ext-symmetry")
    window = Check("orbit-hom-window")
    size = Check("tilting-sets-have-n-members")
    two = Check("two-completions")
    objs = cc.objects
    for x, y in itertools.product(objs, repeat=2):
        sym.checked += 1
        if cc.ext1(x, y) != cc.ext1(y, x):
            sym.fail(pair=[str(x), str(y)])
        window.checked += 1
        stray = {i: d for i, d in cc.window_dims(x, y).items() if d and i not in (0, 1)}
        if stray:
            window.fail(pair=[str(x), str(y)], degrees=sorted(stray))
    sets = cc.maximal_ext_free_sets()
    for t in sets:
        size.checked += 1
        if len(t) != q.n:
            size.fail(set=[str(x) for x in t])
        for x in t:
            two.checked += 1
            rest = [y for y in t if y != x]
            cands = [z for z in objs if z not in rest and cc.is_rigid(z) and all(cc.ext1(z, b) == 0 for b in rest)]
            if len(cands) != 2:
                two.fail(partial=[str(y) for y in rest], completions=len(cands))
    size.details["count"] = len(sets)
    out = [sym, window, size, two]
    if algebras:
        out.extend(check_algebras(q, sets))
    return out


def check_algebras(q: ValuedQuiver, sets) -> list[Check]:
    cc = cluster_category(q)
    square = Check("degree-one-squares-to-zero")
    dims = Check("dim-lambda-equals-dim-a-plus-bimodule")
    models = Check("trivial-extension-matches-orbit-model")
    for t in sets:
        orbit = orbit_endomorphism_algebra(cc, t)
        square.checked += 1
        if not orbit.degree_one_square_zero():
            square.fail(set=[str(x) for x in t])
        if all(x.shift == 0 for x in t):
            te = trivial_extension_model(module_reps(cc, t), check=False)
            dims.checked += 1
            if te.Lam.dim != te.A.dim + te.bimodule_dim or not te.Lam.degree_one_square_zero():
                dims.fail(set=[str(x) for x in t])
            models.checked += 1
            if te.Lam.dim != orbit.dim or te.Lam.gabriel_quiver() != orbit.gabriel_quiver():
                models.fail(set=[str(x) for x in t])
    return [square, dims, models]


def check_reflections(q: ValuedQuiver) -> list[Check]:
    out = []
    for k in q.vertices:
        if not (is_sink(q, k) or is_source(q, k)):
            continue
        out += [verify_gamma_commutes(q, k), verify_dim_commutes(q, k), verify_boundary_images(q, k), verify_inverse(q, k)]
        out.append(equivalence_invariants(q, k))
    return out


def check_k0(q: ValuedQuiver) -> list[Check]:
    chk = Check("root-category-k0-is-free")
    chk.checked = 1
    g = k0_quotient(q, "[2]")
    if g.invariant_factors != [0] * q.n:
        chk.fail(factors=g.invariant_factors)
    chk.details["F"] = k0_quotient(q, "F").description
    return [chk]


def run_verification(q: ValuedQuiver, algebras: bool = True) -> list[Check]:
    """Every suite applicable to q (valued quivers skip the matrix-level ones)."""
    checks = check_roots(q)
    if q.simply_laced:
        checks += check_modules(q) + check_derived(q) + check_cluster(q, algebras)
    checks += check_reflections(q) + check_k0(q)
    return checks
