import itertools
import random

import networkx as nx
import pytest

from clustercat import linalg
from clustercat.cluster import (
    ClusterCategory,
    cluster_category,
    ind_root_category,
    k0_quotient,
    root_dim,
    root_hom_dim,
    smith_factors,
)
from clustercat.derived import DerivedModel, DerivedObject
from clustercat.errors import InputError, InvariantViolation
from clustercat.quiver import ValuedQuiver, all_orientations, apply_matrix
from clustercat.roots import almost_positive_roots
from oracles import invariant_factors_by_minors, tilting_sets_bruteforce

A2 = ValuedQuiver.linear("A2")
A3 = ValuedQuiver.linear("A3")


def test_object_counts():
    for label, count in [("A1", 2), ("A2", 5), ("A3", 9), ("D4", 16)]:
        assert len(cluster_category(ValuedQuiver.linear(label)).objects) == count


def test_small_hom_and_ext_values():
    cc = cluster_category(A2)
    m = cc.model
    h = cc.hom(m.P(2), m.P(1))
    assert (h.deg0.dim, h.deg1.dim) == (1, 0)
    s1 = cc.normalize(m.simple(1))
    assert cc.ext1(s1, m.P(2)) == 1 == cc.ext1(m.P(2), s1)
    for x in cc.objects:
        assert cc.hom_dim(x, x) >= 1
        assert cc.hom(x, x).total_dim == len(cc.identity(x))


def test_linear_a3_set_has_one_dimensional_orbit_hom():
    cc = cluster_category(A3)
    m = cc.model
    T = [cc.normalize(m.simple(1)), m.P(1), m.P(3)]
    assert sum(m.hom_dim(a, m.F(b)) for a in T for b in T) == 1


@pytest.mark.parametrize("q", all_orientations("A3") + all_orientations("D4")[:2], ids=str)
def test_ext_symmetry_and_window(q):
    cc = cluster_category(q)
    for x, y in itertools.product(cc.objects, repeat=2):
        assert cc.ext1(x, y) == cc.ext1(y, x)
        cc.hom(x, y, check_window=True)


@pytest.mark.parametrize(
    "q", [A3, ValuedQuiver.from_edges(3, [(2, 1), (2, 3)]), ValuedQuiver.linear("D4")], ids=str
)
def test_tilting_sets_match_brute_force(q):
    cc = cluster_category(q)
    brute = tilting_sets_bruteforce(cc.objects, cc.ext1, q.n)
    assert sorted(map(sorted, brute)) == sorted(map(sorted, cc.tilting_sets()))


@pytest.mark.parametrize("label,count", [("A1", 2), ("A2", 5), ("A3", 14), ("A4", 42), ("D4", 50), ("D5", 182)])
def test_tilting_counts_pinned(label, count):
    # A_n counts are Catalan numbers; D_4, D_5 are regression values from the brute-force oracle
    assert len(cluster_category(ValuedQuiver.linear(label)).tilting_sets()) == count


def test_a1_tilting_sets():
    cc = cluster_category(ValuedQuiver.linear("A1"))
    m = cc.model
    assert cc.tilting_sets() == [(m.P(1),), (m.P(1, shift=1),)]


def test_exchange_graph_a2_is_pentagon():
    g = cluster_category(A2).exchange_graph()
    assert nx.is_isomorphic(g, nx.cycle_graph(5))


@pytest.mark.parametrize("label", ["A3", "D4"])
def test_exchange_graph_is_regular_and_connected(label):
    q = ValuedQuiver.linear(label)
    g = cluster_category(q).exchange_graph()
    assert {d for _, d in g.degree()} == {q.n}
    assert nx.is_connected(g)


def test_completions():
    cc = cluster_category(A2)
    m = cc.model
    assert len(cc.completions([m.P(1)])) == 2
    with pytest.raises(InputError):
        cc.completions([m.P(1), m.P(2)])
    s1 = cc.normalize(m.simple(1))
    cc3 = cluster_category(A3)
    with pytest.raises(InputError):
        cc3.completions([cc3.normalize(cc3.model.simple(1)), cc3.model.P(2)])
    assert s1 in cc.objects


@pytest.mark.parametrize("label", ["A2", "A3", "D4"])
def test_gamma_bijection(label):
    q = ValuedQuiver.linear(label)
    cc = cluster_category(q)
    assert sorted(cc.gamma(x) for x in cc.objects) == sorted(almost_positive_roots(q.cartan))
    assert str(cc.gamma(cc.model.P(1, shift=1))) == "-a1"


def test_normalize_folds_into_domain():
    cc = cluster_category(A3)
    m = cc.model
    for x in cc.objects:
        for s in (-2, -1, 1, 2):
            y = x
            for _ in range(abs(s)):
                y = m.F(y) if s > 0 else m.F_inv(y)
            assert cc.normalize(y) == x
    assert cc.normalize(m.P(2, shift=1)) == m.P(2, shift=1)
    assert cc.tau(cc.tau_inv(m.P(1))) == m.P(1)
    assert cc.shift(m.P(3), 2) == cc.normalize(m.P(3).shifted(2))


def _rand(n, rng):
    return [rng.randint(-2, 2) for _ in range(n)]


@pytest.mark.parametrize("q", [A3, ValuedQuiver.from_edges(3, [(2, 1), (2, 3)]), ValuedQuiver.linear("D4")], ids=str)
def test_composition_is_associative_and_unital(q):
    cc = ClusterCategory(q)
    rng = random.Random(3)
    objs = cc.objects
    for _ in range(60):
        w, x, y, z = (rng.choice(objs) for _ in range(4))
        dims = [cc.hom(w, x).total_dim, cc.hom(x, y).total_dim, cc.hom(y, z).total_dim]
        f, g, h = (_rand(d, rng) for d in dims)
        gf = cc.compose(w, x, y, f, g)
        hg = cc.compose(x, y, z, g, h)
        assert list(cc.compose(w, y, z, gf, h)) == list(cc.compose(w, x, z, f, hg))
    for x, y in itertools.product(objs, repeat=2):
        f = _rand(cc.hom(x, y).total_dim, rng)
        assert list(cc.compose(x, x, y, cc.identity(x), f)) == f
        assert list(cc.compose(x, y, y, f, cc.identity(y))) == f


def test_degree_one_products_vanish_and_degree_zero_acts():
    cc = cluster_category(A3)
    m = cc.model
    T = [cc.normalize(m.simple(1)), m.P(1), m.P(3)]
    seen_mixed = False
    for a, b, c in itertools.product(T, repeat=3):
        ten = cc.composition_tensor(a, b, c)
        hab, hbc = cc.hom(a, b), cc.hom(b, c)
        for p in range(hab.deg0.dim, hab.total_dim):
            for q_ in range(hbc.deg0.dim, hbc.total_dim):
                assert not any(ten[:, p, q_])
        if hab.deg1.dim and hbc.deg0.dim and any(ten[:, hab.deg0.dim :, : hbc.deg0.dim].flat):
            seen_mixed = True
    assert seen_mixed


def test_root_category():
    model = DerivedModel(A2)
    objs = ind_root_category(model)
    assert len(objs) == 6
    assert sorted(root_dim(x) for x in objs) == sorted([(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)])
    assert root_dim(DerivedObject((1, 0), 1)) == (-1, 0)
    for x in objs:
        assert root_hom_dim(model, x, x) == 1


@pytest.mark.parametrize(
    "q",
    [ValuedQuiver.linear(x) for x in ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6", "B2", "C3", "G2"]]
    + all_orientations("D4")[:3],
    ids=str,
)
def test_k0_matches_determinantal_divisors(q):
    for auto in ("F", "[2]"):
        g = k0_quotient(q, auto)
        assert g.invariant_factors == invariant_factors_by_minors(g.relation)
    assert k0_quotient(q, "[2]").invariant_factors == [0] * q.n
    assert k0_quotient(q, "[2]").description == ("Z" if q.n == 1 else f"Z^{q.n}")


@pytest.mark.parametrize("label", ["A2", "A3", "D4", "B2", "G2"])
def test_k0_action_of_f_matches_model(label):
    q = ValuedQuiver.linear(label)
    model = DerivedModel(q)
    mf = -model.coxeter_inv
    for key in model.roots:
        for s in (0, 1):
            x = DerivedObject(key, s)
            assert model.k0_class(model.F(x)) == apply_matrix(mf, model.k0_class(x))


@pytest.mark.parametrize(
    "label,group",
    [
        ("A1", "Z"),
        ("A2", "trivial group"),
        ("A3", "Z"),
        ("A4", "trivial group"),
        ("A5", "Z"),
        ("A6", "trivial group"),
        ("D4", "Z^2"),
        ("D5", "Z"),
        ("D6", "Z^2"),
        ("E6", "trivial group"),
        ("E7", "Z"),
        ("B2", "Z/2"),
        ("B3", "Z"),
        ("C3", "Z"),
        ("F4", "trivial group"),
        ("G2", "Z/3"),
    ],
)
def test_k0_cluster_pinned(label, group):
    # values produced by the determinantal-divisor oracle, frozen
    assert k0_quotient(ValuedQuiver.linear(label), "F").description == group


def test_smith_factors_edge_cases():
    assert smith_factors([]) == []
    assert smith_factors([[0, 0], [0, 0]]) == [0, 0]
    assert smith_factors([[2, 0], [0, 3]]) == [1, 6]
    with pytest.raises(InputError):
        k0_quotient(A2, "tau")


def test_domain_checks():
    cc = cluster_category(A2)
    with pytest.raises((InputError, InvariantViolation)):
        cc.hom(DerivedObject((1, 0), 2), DerivedObject((1, 0)))
    assert linalg.rank(linalg.eye(2)) == 2
