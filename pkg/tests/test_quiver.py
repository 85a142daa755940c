import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustercat.errors import InputError
from clustercat.io import format_quiver, parse_quiver, parse_quiver_text
from clustercat.quiver import (
    ValuedQuiver,
    all_orientations,
    apply_matrix,
    coxeter_matrix,
    euler_form,
    injective_dims,
    is_sink,
    is_source,
    projective_dims,
    reflect_orientation,
    sink_admissible_order,
)
from clustercat.roots import dynkin_label
from oracles import count_paths, euler_form_oracle

ORIENTED = [q for lab in ["A1", "A3", "A4", "D4", "D5", "E6"] for q in all_orientations(lab)]


def test_orientation_counts():
    # a tree with e edges has 2^e orientations
    assert [len(all_orientations(x)) for x in ["A1", "A2", "A5", "D4", "E6", "G2"]] == [1, 2, 16, 8, 32, 2]


@pytest.mark.parametrize("q", ORIENTED[::5], ids=str)
def test_projective_and_injective_dims_count_paths(q):
    arrows = [a.key for a in q.arrows]
    p, i = projective_dims(q), injective_dims(q)
    for a in q.vertices:
        assert p[a] == tuple(count_paths(q.n, arrows, a, b) for b in q.vertices)
        assert i[a] == tuple(count_paths(q.n, arrows, b, a) for b in q.vertices)


@pytest.mark.parametrize("q", ORIENTED[::5], ids=str)
def test_euler_form_matches_arrow_count(q):
    arrows = [a.key for a in q.arrows]
    basis = [tuple(int(i == j) for j in range(q.n)) for i in range(q.n)]
    for x in basis:
        for y in basis:
            assert euler_form(q, x, y) == euler_form_oracle(q.n, arrows, x, y)


@pytest.mark.parametrize("q", ORIENTED, ids=str)
def test_coxeter_sends_projectives_to_negative_injectives(q):
    phi = coxeter_matrix(q)
    p, i = projective_dims(q), injective_dims(q)
    for a in q.vertices:
        assert apply_matrix(phi, p[a]) == tuple(-x for x in i[a])


@pytest.mark.parametrize("q", ORIENTED, ids=str)
def test_sink_admissible_order(q):
    order = sink_admissible_order(q)
    assert sorted(order) == list(q.vertices)
    cur = q
    for k in order:
        assert is_sink(cur, k)
        cur = reflect_orientation(cur, k)
    assert cur == q


def test_reflection_at_sink_makes_source():
    q = ValuedQuiver.from_edges(3, [(1, 2), (3, 2)])
    r = reflect_orientation(q, 2)
    assert is_source(r, 2)
    assert reflect_orientation(r, 2) == q
    with pytest.raises(InputError):
        reflect_orientation(q, 4)


def test_valued_reflection_swaps_valuation():
    q = ValuedQuiver.from_edges(2, [(1, 2, 1, 3)])
    r = reflect_orientation(q, 2)
    assert r.arrows[0].key == (2, 1)
    assert r.cartan == q.cartan


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A4", "D5", "E6", "B3", "C3", "F4", "G2"]), st.data())
def test_format_parse_round_trip(label, data):
    q = data.draw(st.sampled_from(all_orientations(label)))
    assert parse_quiver_text(format_quiver(q)) == q
    assert dynkin_label(q.cartan) == label


def test_parse_sources():
    assert parse_quiver("A3") == ValuedQuiver.linear("A3")
    assert parse_quiver("1->2; 3->2") == ValuedQuiver.from_edges(3, [(1, 2), (3, 2)])
    g2 = parse_quiver("1 -> 2 [1 3]")
    assert g2.cartan.cartan == ((2, -1), (-3, 2))
    assert parse_quiver("rank 1") == ValuedQuiver(1, ())


def test_parse_file(tmp_path):
    f = tmp_path / "d4.quiver"
    f.write_text("# D4 with a central sink\ntype D4 rank 4\n1 -> 2\n3 -> 2\n4 -> 2\n")
    q = parse_quiver(f)
    assert q.sinks == (2,)
    assert dynkin_label(q.cartan) == "D4"


@pytest.mark.parametrize(
    "text,line",
    [
        ("1 -> 2\nbanana", 2),
        ("1 -> 2\ntype A2", 2),
        ("0 -> 1", 1),
        ("1 -> 2 [0 1]", 1),
    ],
)
def test_parse_errors_report_lines(text, line):
    with pytest.raises(InputError) as exc:
        parse_quiver_text(text)
    assert exc.value.line == line


@pytest.mark.parametrize(
    "text",
    [
        "1->2;2->3;3->1",  # oriented cycle
        "1->2;2->1",  # double edge
        "type A3\n1->2",  # declared rank 3, but the graph is A2 + A1
        "1->2;1->3;1->4;1->5",  # affine D4
        "rank 2\n1->3",
        "",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(InputError):
        parse_quiver(text) if text else parse_quiver_text(text)


def test_non_dynkin_allowed_on_request():
    q = parse_quiver("1->2;1->3;1->4;1->5", allow_non_dynkin=True)
    assert not q.is_dynkin
    assert q.n == 5


def test_digest_is_orientation_sensitive():
    a, b = all_orientations("A2")
    assert a.digest != b.digest
    assert a.digest == ValuedQuiver.from_edges(2, [a.arrows[0].key]).digest
