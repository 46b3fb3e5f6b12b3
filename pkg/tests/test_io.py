import pytest
from hypothesis import given, settings

from digitopo import GraphDocument, GraphParseError, canonical_key, emit_graph, parse_graph
from digitopo.generators import cycle, minimal_sphere, random_sphere, torus_grid
from digitopo.io import read_graph

from test_space import graphs

C4_JSON = '{"name":"C4","vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["d","a"]]}'


def test_parse_json_and_text_agree():
    a = parse_graph(C4_JSON).to_space()
    b = parse_graph("a b\nb c\nc d\nd a").to_space()
    assert a == b
    assert canonical_key(a) == canonical_key(cycle(4))
    assert parse_graph(C4_JSON).name == "C4"


def test_text_format_details():
    doc = parse_graph("# comment\n\na b\nz\n")
    assert sorted(doc.vertices) == ["a", "b", "z"] and doc.edges == [["a", "b"]]
    with pytest.raises(GraphParseError, match="line 1"):
        parse_graph("a b c")


@pytest.mark.parametrize("text,needle", [
    ('{"vertices":["a"],"edges":[["a","q"]]}', "'q'"),
    ('{"vertices":["a","b"],"edges":[["a","b"],["b","a"]]}', "duplicate edge"),
    ('{"vertices":["a"],"edges":[["a","a"]]}', "self-loop"),
    ('{"vertices":["a","a"],"edges":[]}', "duplicate vertex"),
    ('{"edges":[]}', "vertices"),
    ('{"vertices":["a"],"edges":[["a"]]}', "edges[0]"),
    ('{"vertices": [', "line 1"),
    ("a b\nb a\n", "line 2"),
    ("a a\n", "self-loop"),
])
def test_parse_errors_are_precise(text, needle):
    with pytest.raises(GraphParseError) as e:
        parse_graph(text)
    assert needle in str(e.value)


def test_emit_is_canonical():
    doc = GraphDocument("x", ["b", "a"], [["b", "a"]])
    assert emit_graph(doc) == emit_graph(GraphDocument("x", ["a", "b"], [["a", "b"]]))
    assert emit_graph(doc, "text") == "# x\na b\n"
    with pytest.raises(ValueError):
        emit_graph(doc, "yaml")


def test_roundtrip_on_corpus():
    for G in [minimal_sphere(3), torus_grid(4, 5), random_sphere(2, 4, 2)[0], cycle(9)]:
        doc = GraphDocument.from_space(G, "g")
        for fmt in ("json", "text"):
            back = parse_graph(emit_graph(doc, fmt)).to_space()
            assert back == G and canonical_key(back) == canonical_key(G)


@settings(max_examples=80, deadline=None)
@given(graphs(8))
def test_roundtrip_property(G):
    doc = GraphDocument.from_space(G, "h")
    assert parse_graph(emit_graph(doc, "json")).to_space() == G
    assert parse_graph(emit_graph(doc, "text")).to_space() == G


def test_metadata_survives_json(tmp_path):
    G, _ = random_sphere(2, 2, 5)
    p = tmp_path / "s.json"
    p.write_text(emit_graph(GraphDocument.from_space(G, "s")))
    doc = read_graph(str(p))
    assert doc.metadata["seed"] == 5 and doc.to_space() == G
    q = tmp_path / "plain.txt"
    q.write_text("a b\n")
    assert read_graph(str(q)).name == "plain"
