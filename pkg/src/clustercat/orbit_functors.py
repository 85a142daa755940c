"""Reflection functors induced on the cluster and root categories.

At a sink k the derived functor of S_k^+ sends E_k to E'_k[-1] and every
other indecomposable module M to S_k^+ M (dimension vector s_k(dim M)); at a
source S_k^- sends E_k to E'_k[1].  Shifts are carried along, and the image
is normalized in the orbit category of s_k Q.  Simply-laced quivers compute
the module case with the matrix-level functor; valued quivers work with
dimension vectors.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Sequence

from .cluster import cluster_category, ind_root_category, root_dim, root_normalize
from .derived import DerivedObject
from .errors import InputError, InvariantViolation
from .quiver import ValuedQuiver, is_sink, is_source, reflect_orientation
from .rep import hom_ext_dims, reflect
from .report import Check
from .roots import AlmostPositiveRoot, simple_reflection, simple_root, truncated_reflection


def reflection_sign(q: ValuedQuiver, k: int) -> int:
    """+1 for a sink (S_k^+), -1 for a source (S_k^-); an isolated vertex counts as a sink."""
    if is_sink(q, k):
        return 1
    if is_source(q, k):
        return -1
    raise InputError(f"vertex {k} is neither a sink nor a source")


def _level(q: ValuedQuiver, level: str | None) -> str:
    if level is None:
        return "matrix" if q.simply_laced else "label"
    if level not in ("matrix", "label"):
        raise InputError(f"unknown level {level!r}")
    if level == "matrix" and not q.simply_laced:
        raise InputError("matrix-level reflection needs a simply-laced quiver")
    return level


def derived_reflect(q: ValuedQuiver, k: int, x: DerivedObject, level: str | None = None) -> DerivedObject:
    """Image of M[a] under the derived reflection functor at k (not normalized)."""
    sign = reflection_sign(q, k)
    level = _level(q, level)
    ek = simple_root(k, q.n)
    if x.key == ek:
        return DerivedObject(ek, x.shift - sign)
    key = simple_reflection(k, x.key, q.cartan)
    if level == "matrix":
        src = cluster_category(q).model.catalog[x.key]
        img = reflect(k, sign, src)
        if img.dims != key:
            raise InvariantViolation(f"dim S_{k}({x.key}) = {img.dims} but s_{k} gives {key}")
        target = cluster_category(img.quiver).model.catalog
        if key not in target:
            raise InvariantViolation(f"reflected module {key} is not a positive root")
        if hom_ext_dims(img, img) != (1, 0):
            raise InvariantViolation(f"reflected module {key} is not exceptional")
    return DerivedObject(key, x.shift)


def cluster_reflect(q: ValuedQuiver, k: int, x: DerivedObject, level: str | None = None) -> DerivedObject:
    """Induced functor C(Q) -> C(s_k Q) on fundamental-domain objects."""
    cc = cluster_category(q)
    if not cc.in_domain(x):
        raise InputError(f"{x} is not a fundamental-domain object")
    q2 = reflect_orientation(q, k)
    return cluster_category(q2).normalize(derived_reflect(q, k, x, level))


def root_reflect(q: ValuedQuiver, k: int, x: DerivedObject, level: str | None = None) -> DerivedObject:
    """Induced functor R(Q) -> R(s_k Q) on representatives M, M[1]."""
    if x.shift not in (0, 1):
        raise InputError(f"{x} is not a root-category representative")
    return root_normalize(derived_reflect(q, k, x, level))


def gamma(q: ValuedQuiver, x: DerivedObject) -> AlmostPositiveRoot:
    """dim X for a module, -alpha_i for P_i[1]."""
    return cluster_category(q).gamma(x)


# ---------------------------------------------------------------------------
# verification sweeps


def verify_gamma_commutes(q: ValuedQuiver, k: int, level: str | None = None) -> Check:
    """gamma_{s_k Q}(reflect X) = sigma_k(gamma_Q X) for every fundamental-domain X."""
    chk = Check(f"gamma-commutes-with-truncated-reflection(k={k})")
    q2 = reflect_orientation(q, k)
    for x in cluster_category(q).objects:
        y = cluster_reflect(q, k, x, level)
        lhs = gamma(q2, y)
        rhs = truncated_reflection(k, gamma(q, x), q.cartan)
        chk.checked += 1
        if lhs != rhs:
            chk.fail(object=str(x), image=str(y), gamma_image=str(lhs), sigma=str(rhs))
    return chk


def verify_dim_commutes(q: ValuedQuiver, k: int, level: str | None = None) -> Check:
    """dim(root_reflect X) = s_k(dim X) for every X in ind R(Q)."""
    chk = Check(f"dim-commutes-with-reflection(k={k})")
    model = cluster_category(q).model
    for x in ind_root_category(model):
        y = root_reflect(q, k, x, level)
        lhs = root_dim(y)
        rhs = simple_reflection(k, root_dim(x), q.cartan)
        chk.checked += 1
        if lhs != rhs:
            chk.fail(object=str(x), image=str(y), dim_image=lhs, reflected=rhs)
    return chk


def boundary_image_pairs(q: ValuedQuiver, k: int) -> dict[DerivedObject, DerivedObject]:
    """Prescribed images for a sink k: E_k -> P'_k[1], P_k[1] -> E'_k, P_j[1] -> P'_j[1]
    and P_j -> P'_j for j != k."""
    if not is_sink(q, k):
        raise InputError(f"vertex {k} is not a sink")
    q2 = reflect_orientation(q, k)
    m, m2 = cluster_category(q).model, cluster_category(q2).model
    out = {m.simple(k): m2.P(k, 1), m.P(k, 1): m2.simple(k)}
    for j in q.vertices:
        if j != k:
            out[m.P(j, 1)] = m2.P(j, 1)
            out[m.P(j)] = m2.P(j)
    return out


def verify_boundary_images(q: ValuedQuiver, k: int, level: str | None = None) -> Check:
    """Compare the computed functor with the prescribed boundary images.

    At a source k the functor is the inverse of the one at the sink k of
    s_k Q, so the prescribed pairs are read backwards.
    """
    chk = Check(f"boundary-images(k={k})")
    if reflection_sign(q, k) == 1:
        expected = boundary_image_pairs(q, k)
    else:
        expected = {y: x for x, y in boundary_image_pairs(reflect_orientation(q, k), k).items()}
    for x, want in sorted(expected.items()):
        got = cluster_reflect(q, k, x, level)
        chk.checked += 1
        if got != want:
            chk.fail(object=str(x), image=str(got), expected=str(want))
    return chk


def verify_inverse(q: ValuedQuiver, k: int, level: str | None = None) -> Check:
    """Reflecting at k and then back at k (dual functor) is the identity on objects."""
    chk = Check(f"reflect-back-is-identity(k={k})")
    q2 = reflect_orientation(q, k)
    for x in cluster_category(q).objects:
        y = cluster_reflect(q, k, x, level)
        z = cluster_reflect(q2, k, y, level)
        chk.checked += 1
        if z != x:
            chk.fail(object=str(x), image=str(y), back=str(z))
    return chk


def equivalence_invariants(q: ValuedQuiver, k: int, level: str | None = None) -> Check:
    """Bijection on objects, preserved Ext^1_C dimensions, tilting sets onto tilting sets."""
    chk = Check(f"equivalence-invariants(k={k})")
    q2 = reflect_orientation(q, k)
    cc, cc2 = cluster_category(q), cluster_category(q2)
    image = {x: cluster_reflect(q, k, x, level) for x in cc.objects}
    chk.checked += 1
    if sorted(image.values()) != sorted(cc2.objects):
        chk.fail(property="bijection", images=sorted(str(v) for v in image.values()))
    if q.simply_laced:
        for x, y in itertools.product(cc.objects, repeat=2):
            chk.checked += 1
            a, b = cc.ext1(x, y), cc2.ext1(image[x], image[y])
            if a != b:
                chk.fail(property="ext1", pair=[str(x), str(y)], before=a, after=b)
        t1, t2 = cc.tilting_sets(), cc2.tilting_sets()
        mapped = sorted(tuple(sorted(image[x] for x in t)) for t in t1)
        chk.checked += 1
        if mapped != sorted(tuple(sorted(t)) for t in t2):
            chk.fail(property="tilting-sets", before=len(t1), after=len(t2))
        chk.details["tilting_count"] = [len(t1), len(t2)]
    return chk


# ---------------------------------------------------------------------------
# moving shifted projectives into the module category


def normalize_to_modules(q: ValuedQuiver, T: Sequence[DerivedObject], max_depth: int | None = None):
    """Apply sink/source reflections until every member of T is a module.

    Breadth-first over reflection sequences; returns (quiver, objects, path)
    where path lists the vertices reflected at.  Labels (positions) are kept.
    """
    T = tuple(T)
    max_depth = 2 * q.n + 2 if max_depth is None else max_depth
    start = (q, T)
    seen = {(q, frozenset(T))}
    queue = deque([(start, [])])
    while queue:
        (cur, objs), path = queue.popleft()
        if all(x.shift == 0 for x in objs):
            return cur, list(objs), path
        if len(path) >= max_depth:
            continue
        for k in cur.vertices:
            if not (is_sink(cur, k) or is_source(cur, k)):
                continue
            nxt = reflect_orientation(cur, k)
            img = tuple(cluster_reflect(cur, k, x) for x in objs)
            key = (nxt, frozenset(img))
            if key not in seen:
                seen.add(key)
                queue.append(((nxt, img), path + [k]))
    raise InvariantViolation("no reflection sequence turns the tilting set into modules")
