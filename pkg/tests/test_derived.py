import itertools

import pytest

from clustercat.derived import DerivedModel, DerivedObject
from clustercat.errors import InputError
from clustercat.quiver import ValuedQuiver, all_orientations

A2 = ValuedQuiver.linear("A2")


@pytest.fixture(scope="module")
def a2():
    return DerivedModel(A2)


def test_translate_rules(a2):
    assert a2.tau(a2.P(1)) == a2.I(1, shift=-1)
    assert a2.tau_inv(a2.I(2)) == a2.P(2, shift=1)
    # tau S_1 = P_2 in the AR quiver P_2 -> P_1 -> S_1
    assert a2.tau(a2.simple(1)) == a2.P(2)


def test_cluster_shift_functor(a2):
    # tau^-1 P_2 = S_1 = I_1
    assert a2.F(a2.P(2)) == a2.I(1, shift=1)
    assert a2.F(a2.P(1)) == a2.P(2, shift=2)
    for key in a2.roots:
        for s in (-2, 0, 3):
            x = DerivedObject(key, s)
            assert a2.F(a2.F_inv(x)) == x
            assert a2.apply_auto(x, "shift", 2) == x.shifted(2)


def test_hom_degree_rule(a2):
    p1, p2, s1, s2 = a2.P(1), a2.P(2), a2.simple(1), a2.simple(2)
    assert a2.hom_dim(p2, p1) == 1
    assert a2.hom_dim(s1, s2.shifted(1)) == 1
    assert a2.hom_dim(s2, s1.shifted(1)) == 0
    for x, y in itertools.product([p1, p2, s1], repeat=2):
        assert a2.hom_dim(x, y.shifted(2)) == 0
        assert a2.hom_dim(x, y.shifted(-1)) == 0


@pytest.mark.parametrize("q", all_orientations("A3") + all_orientations("D4")[:3], ids=str)
def test_serre_duality_dimensions(q):
    m = DerivedModel(q)
    for a, b in itertools.product(m.roots, repeat=2):
        x, y = DerivedObject(a), DerivedObject(b)
        assert m.hom_dim(x, m.tau(y).shifted(1)) == m.hom_dim(y, x)


@pytest.mark.parametrize("q", all_orientations("A4")[:3], ids=str)
def test_hom_from_projective_reads_dimension(q):
    m = DerivedModel(q)
    for i in q.vertices:
        for key in m.roots:
            assert m.hom_dim(m.P(i), DerivedObject(key)) == key[i - 1]


def test_valued_model_uses_coxeter_matrix():
    b2 = ValuedQuiver.from_edges(2, [(1, 2, 1, 2)])
    m = DerivedModel(b2)
    for key in m.roots:
        x = DerivedObject(key)
        assert m.tau_inv(m.tau(x)) == x
        assert m.F(x) == m.tau_inv(x.shifted(1))
    with pytest.raises(InputError):
        m.hom_dim(m.P(1), m.P(2))


def test_k0_class_sign(a2):
    assert a2.k0_class(DerivedObject((1, 0), 1)) == (-1, 0)
    assert a2.k0_class(DerivedObject((1, 1), 2)) == (1, 1)


def test_rejects_non_roots(a2):
    with pytest.raises(InputError):
        a2.check(DerivedObject((2, 1)))
    with pytest.raises(InputError):
        DerivedModel(ValuedQuiver.from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)]))


def test_composition_of_hom_and_ext():
    q = ValuedQuiver.linear("A3")
    m = DerivedModel(q)
    p3, p2, s2 = m.P(3), m.P(2), m.simple(2)
    # P_3 -> P_2 -> S_2 composes to zero (S_2 has no vertex 3 component)
    f, g, r = m.hom(p3, p2), m.hom(p2, s2), m.hom(p3, s2)
    assert (f.dim, g.dim, r.dim) == (1, 1, 0)
    # S_2 -> P_3[1] (the extension 0 -> P_3 -> P_2 -> S_2 -> 0) after P_2 -> S_2 is zero
    e = m.hom(s2, p3.shifted(1))
    res = m.hom(p2, p3.shifted(1))
    assert e.kind == "ext" and e.dim == 1 and res.dim == 0
    assert m.compose_data(g, [1], e, [1], res).shape[0] == 0
