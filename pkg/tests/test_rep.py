import itertools
import random
from fractions import Fraction

import pytest

from clustercat import linalg
from clustercat.errors import InputError
from clustercat.quiver import ValuedQuiver, all_orientations, euler_form, is_sink, is_source, reflect_orientation
from clustercat.rep import (
    MorphismMatrix,
    RepCatalog,
    Representation,
    build_injective,
    build_projective,
    build_simple,
    coxeter_functor,
    coxeter_translate,
    hom_ext,
    hom_ext_dims,
    reflect,
    reflect_morphism,
    thin_representation,
)
from clustercat.roots import enumerate_positive_roots, simple_reflection

A2 = ValuedQuiver.linear("A2")  # 1 -> 2
A3 = ValuedQuiver.linear("A3")  # 1 -> 2 -> 3


def test_projective_path_basis():
    p1 = build_projective(A2, 1)
    assert p1.dims == (1, 1)
    assert linalg.equal(p1.mats[(1, 2)], linalg.matrix([[1]]))
    assert build_projective(A3, 1).dims == (1, 1, 1)
    assert build_projective(A3, 3).dims == (0, 0, 1) == build_simple(A3, 3).dims


def test_injective_and_simple():
    assert build_injective(A2, 2).dims == (1, 1)
    assert hom_ext_dims(build_injective(A2, 2), build_projective(A2, 1)) == (1, 0)
    assert build_simple(A3, 2).dims == (0, 1, 0)


def test_small_hom_ext_values():
    p1, p2, s1, s2 = (build_projective(A2, 1), build_projective(A2, 2), build_simple(A2, 1), build_simple(A2, 2))
    assert hom_ext_dims(p2, p1) == (1, 0)
    assert hom_ext_dims(s1, s2) == (0, 1)
    assert hom_ext_dims(s2, s1) == (0, 0)


def test_hom_basis_are_intertwiners_and_identity_first():
    cat = RepCatalog(ValuedQuiver.linear("D4"))
    for a, b in itertools.product(cat.keys(), repeat=2):
        h, _ = hom_ext(cat[a], cat[b])
        assert all(f.is_intertwiner() for f in h.basis)
        if a == b:
            assert h.basis[0] == MorphismMatrix.identity(cat[a])


@pytest.mark.parametrize("q", all_orientations("A4")[::3] + all_orientations("D4")[::3], ids=str)
def test_catalog_is_gabriel_bijection(q):
    cat = RepCatalog(q)
    assert sorted(cat.keys()) == sorted(enumerate_positive_roots(q.cartan))
    for key in cat.keys():
        assert cat[key].dims == key
        assert cat.dims(key, key) == (1, 0)


@pytest.mark.parametrize("q", [ValuedQuiver.from_edges(4, [(2, 1), (2, 3), (4, 2)]), ValuedQuiver.linear("A4")], ids=str)
def test_euler_and_auslander_reiten_identities(q):
    cat = RepCatalog(q)
    for x, y in itertools.product(cat.keys(), repeat=2):
        h, e = cat.dims(x, y)
        assert h - e == euler_form(q, x, y)
        tx = cat.tau[x]
        assert e == (0 if tx is None else cat.hom_dim(y, tx))


def test_reflection_small_cases():
    e2 = build_simple(A2, 2)
    assert reflect(2, 1, e2).is_zero
    assert reflect(2, 1, build_projective(A2, 1)).dims == (1, 0)
    assert reflect(2, 1, build_simple(A2, 1)).dims == (1, 1)
    with pytest.raises(InputError):
        reflect(1, 1, e2)  # 1 is a source of 1 -> 2


@pytest.mark.parametrize("q", all_orientations("D5")[::4] + all_orientations("A4")[::2], ids=str)
def test_reflection_dimension_formula(q):
    cat = RepCatalog(q)
    for k in q.vertices:
        sign = 1 if is_sink(q, k) else -1 if is_source(q, k) else 0
        if not sign:
            continue
        for key in cat.keys():
            img = reflect(k, sign, cat[key])
            if sum(key) == 1 and key[k - 1] == 1:
                assert img.is_zero
            else:
                assert img.dims == simple_reflection(k, key, q.cartan)
                assert img.quiver == reflect_orientation(q, k)


def _random_morphism(x: Representation, y: Representation, rng) -> MorphismMatrix:
    h, _ = hom_ext(x, y)
    return h.element([Fraction(rng.randint(-3, 3)) for _ in range(h.dim)])


def test_reflection_is_a_functor():
    rng = random.Random(7)
    q = ValuedQuiver.from_edges(4, [(1, 2), (3, 2), (4, 2)])  # D4, sink 2
    cat = RepCatalog(q)
    keys = cat.keys()
    for _ in range(40):
        a, b, c = (rng.choice(keys) for _ in range(3))
        f = _random_morphism(cat[a], cat[b], rng)
        g = _random_morphism(cat[b], cat[c], rng)
        lhs = reflect_morphism(2, 1, g @ f)
        rhs = reflect_morphism(2, 1, g) @ reflect_morphism(2, 1, f)
        assert lhs == rhs
        assert reflect_morphism(2, 1, f).is_intertwiner()
    x = cat[keys[0]]
    assert reflect_morphism(2, 1, MorphismMatrix.identity(x)) == MorphismMatrix.identity(reflect(2, 1, x))


def test_coxeter_translate_examples():
    s1 = build_simple(A2, 1)
    assert coxeter_functor(s1, 1).dims == (0, 1)
    t2 = coxeter_functor(coxeter_functor(build_simple(A3, 1), 1), 1)
    assert t2.dims == (0, 0, 1)
    for i in A3.vertices:
        assert coxeter_translate(build_projective(A3, i), 1) is None
        assert coxeter_translate(build_injective(A3, i), -1) is None


@pytest.mark.parametrize("q", all_orientations("D4")[:4], ids=str)
def test_coxeter_round_trip_and_matrix(q):
    cat = RepCatalog(q)
    for key in cat.keys():
        if cat.tau[key] is None:
            assert cat.is_projective(key)
            continue
        assert cat.tau_inv[cat.tau[key]] == key
        back = coxeter_functor(coxeter_functor(cat[key], 1), -1)
        assert back.dims == key
        assert hom_ext_dims(back, cat[key])[0] == 1


def test_thin_representation_and_validation():
    q = ValuedQuiver.from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)])
    r = thin_representation(q, (1, 0, 0, 1, 1))
    assert r.dims == (1, 0, 0, 1, 1)
    assert hom_ext_dims(r, r) == (1, 0)
    with pytest.raises(InputError):
        Representation(A2, (1, 1), {(1, 2): linalg.matrix([[1, 0]])})
