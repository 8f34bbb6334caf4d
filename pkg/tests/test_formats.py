import json

import pytest
from hypothesis import given, settings, strategies as st

from pmhkit.errors import FormatError
from pmhkit.formats import (dumps, graph_from_json, graph_to_edgelist, graph_to_json,
                            matching_from_compact, matching_from_json, matching_to_compact,
                            matching_to_json, parse_edgelist, reports_to_csv, reports_to_jsonl)
from pmhkit.graph import Graph, torus
from pmhkit.matchings import enumerate_perfect_matchings

from conftest import corpus


def test_edgelist_round_trip():
    for g in corpus() + [torus(6, 3)]:
        back = parse_edgelist(graph_to_edgelist(g))
        assert back == g
        assert back.label == g.label and back.grid == g.grid


def test_json_round_trip():
    for g in corpus() + [torus(6, 3)]:
        back = graph_from_json(json.loads(dumps(graph_to_json(g))))
        assert back == g and back.grid == g.grid


def test_edgelist_header():
    text = graph_to_edgelist(torus(6, 3))
    assert text.splitlines()[0] == "p 18 36"
    assert "c grid 6 3 cycle cycle" in text


@given(st.integers(1, 9).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1),
                                                      st.integers(0, n - 1))
                                            .filter(lambda e: e[0] != e[1])))))
@settings(max_examples=60, deadline=None)
def test_random_graph_round_trip(data):
    n, edges = data
    g = Graph(n, edges)
    assert parse_edgelist(graph_to_edgelist(g)) == g
    assert graph_from_json(graph_to_json(g)) == g


@pytest.mark.parametrize("text,where", [
    ("p 3 1\n0 x\n", "line 2"),
    ("0 1\n", "line 1"),
    ("p 3 1\n0 5\n", "line 2"),
    ("p 3 1\n0 1 2\n", "line 2"),
    ("p 3\n", "line 1"),
    ("p 3 2\n0 1\n", "header announces"),
    ("c nothing\n", "missing"),
    ("p 4 0\nc grid 2 x cycle cycle\n", "line 2"),
])
def test_edgelist_errors(text, where):
    with pytest.raises(FormatError, match=where):
        parse_edgelist(text)


@pytest.mark.parametrize("data,field", [
    ('{"n": 3}', "'edges'"),
    ('{"n": -1, "edges": []}', "'n'"),
    ('{"n": 3, "edges": [[0, 9]]}', r"edges\[0\]"),
    ('{"n": 3, "edges": [[0, 1], "ab"]}', r"edges\[1\]"),
    ('{"n": 3,', "line 1"),
])
def test_graph_json_errors(data, field):
    with pytest.raises(FormatError, match=field):
        graph_from_json(data)


def test_matching_round_trips():
    g = torus(4, 3)
    for m in list(enumerate_perfect_matchings(g))[:20]:
        assert matching_from_json(matching_to_json(m)) == m
        assert matching_from_compact(matching_to_compact(m), g.n) == m


@pytest.mark.parametrize("text", ["0-1 2", "0-x", "0-9", "0-1-2"])
def test_compact_errors(text):
    with pytest.raises(FormatError):
        matching_from_compact(text, 4)


def test_matching_json_errors():
    with pytest.raises(FormatError, match=r"pairs\[0\]"):
        matching_from_json({"n": 4, "pairs": [[0]]})


def test_reports():
    rows = [{"graph": "K4", "property": "PMH", "verdict": "holds", "total_checked": 3}]
    text = reports_to_jsonl(rows, config={"workers": 1})
    lines = text.splitlines()
    assert json.loads(lines[0]) == {"config": {"workers": 1}}
    assert json.loads(lines[1]) == rows[0]
    csv_text = reports_to_csv(rows, config={"workers": 1})
    assert csv_text.splitlines()[1] == "graph,property,verdict,count,seconds"
    assert csv_text.splitlines()[2] == "K4,PMH,holds,3,"


def test_dumps_is_stable():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
