import json

import pytest

from clustercat import dot
from clustercat.cluster import cluster_category
from clustercat.derived import DerivedObject
from clustercat.errors import InputError
from clustercat.io import object_name, parse_module, parse_object, split_objects
from clustercat.quiver import ValuedQuiver
from clustercat.report import SCHEMA, Check, dumps, envelope

A3 = ValuedQuiver.linear("A3")


@pytest.fixture(scope="module")
def model():
    return cluster_category(A3).model


def test_object_tokens(model):
    assert parse_object("P1", model) == model.P(1)
    assert parse_object("E1", model) == parse_object("S1", model) == DerivedObject((1, 0, 0))
    assert parse_object("P2[1]", model) == model.P(2, shift=1)
    assert parse_object("(0, 1, 1)", model) == DerivedObject((0, 1, 1))
    assert parse_object("tau(S1)", model) == DerivedObject((0, 1, 0))
    assert parse_object("tau^2(E1)", model) == model.P(3)
    assert parse_object("tau^-1(P3)[1]", model) == DerivedObject((0, 1, 0), 1)
    assert parse_object("tau(P1)", model) == model.I(1, shift=-1)


@pytest.mark.parametrize("token", ["Q1", "P4", "(1,0)", "(1,0,1)", "tau(", "P1[x]"])
def test_bad_object_tokens(model, token):
    with pytest.raises(InputError):
        parse_object(token, model)


def test_split_and_names(model):
    assert split_objects("E1 P1;(0, 1,1) tau^-1(P2)[1]") == ["E1", "P1", "(0, 1,1)", "tau^-1(P2)[1]"]
    assert object_name(model.P(2, shift=1), model) == "P2[1]"
    assert object_name(DerivedObject((1, 0, 0)), model) == "I1"
    assert object_name(DerivedObject((0, 1, 0)), model) == "S2"
    d4 = cluster_category(ValuedQuiver.linear("D4")).model
    assert object_name(DerivedObject((0, 1, 1, 1)), d4) == "P2"
    assert object_name(DerivedObject((0, 1, 1, 0)), d4) == "(0,1,1,0)"


def test_module_tokens():
    star = ValuedQuiver.from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)])
    assert parse_module("tau^-1(P2)", star).dims == (1, 0, 1, 1, 1)
    assert parse_module("thin(1,0,0,1,1)", star).dims == (1, 0, 0, 1, 1)
    assert parse_module("(0,1,1)", A3).dims == (0, 1, 1)
    for bad in ["P1[1]", "tau(P2)", "(1,1)", "thin(1,1)", "(1,0,1)", "X"]:
        with pytest.raises(InputError):
            parse_module(bad, star if "thin" in bad or bad in ("P1[1]", "tau(P2)") else A3)


def test_dot_output():
    text = dot.gabriel_dot([1, 2, 3], {(1, 2): 1, (2, 3): 1, (3, 1): 1})
    assert text == 'digraph Lambda {\n  1;\n  2;\n  3;\n  1 -> 2;\n  2 -> 3;\n  3 -> 1;\n}\n'
    assert dot.digraph("Empty", [], {}) == "digraph Empty {\n}\n"
    g2 = ValuedQuiver.from_edges(2, [(1, 2, 1, 3)])
    assert '1 -> 2 [label="(1,3)"];' in dot.quiver_dot(g2)
    assert dot.graph("G", [0, 1], [(1, 0)]) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"
    assert dot._quote("a b") == '"a b"'


def test_report_envelope():
    chk = Check("demo", checked=2)
    chk.fail(pair=((1, 0), (0, 1)))
    rep = envelope("verify", ["verify", "A2"], "abc", {"k": (1, 2)}, [chk], 0.5)
    data = json.loads(dumps(rep))
    assert data["schema"] == SCHEMA
    assert data["verification"]["ok"] is False
    assert data["timing_seconds"] == 0.5
    assert data["verification"]["checks"][0]["counterexamples"] == [{"pair": [[1, 0], [0, 1]]}]
    assert data["results"] == {"k": [1, 2]}
