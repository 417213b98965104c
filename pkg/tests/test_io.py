import pytest
from hypothesis import given
from hypothesis import strategies as st

from cordial.graphs import Digraph, Graph, gen_cycle_out_wheel, gen_wheel
from cordial.io import (
    ParseError,
    format_graph_text,
    format_labelling_text,
    parse_graph_text,
    parse_labelling_text,
    to_dot,
)
from cordial.labelling import Scope, VertexLabelling


def test_parse_digraph_with_comments():
    d = parse_graph_text("# a path\nD 3 2\n0 1  # first\n\n1 2\n")
    assert d == Digraph(3, frozenset({(0, 1), (1, 2)}))


def test_parse_graph_normalises_edges():
    g = parse_graph_text("G 3 1\n2 0\n")
    assert isinstance(g, Graph) and g.edges == {(0, 2)}


@pytest.mark.parametrize(
    "text, line",
    [
        ("", None),
        ("X 2 0\n", 1),
        ("D 2\n", 1),
        ("D 2 1\n", 1),
        ("D 2 1\n0 5\n", 2),
        ("D 2 1\n1 1\n", 2),
        ("D 2 2\n0 1\n0 1\n", 3),
        ("G 2 2\n0 1\n1 0\n", 3),
        ("D 2 1\n0 a\n", 2),
        ("D -1 0\n", 1),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph_text(text)
    assert info.value.line == line


@st.composite
def digraphs(draw):
    n = draw(st.integers(0, 8))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Digraph(n, frozenset(arcs))


@given(digraphs())
def test_digraph_round_trip(d):
    assert parse_graph_text(format_graph_text(d)) == d


def test_graph_round_trip():
    g = gen_wheel(7)
    assert parse_graph_text(format_graph_text(g)) == g


def test_format_is_sorted():
    text = format_graph_text(Digraph(3, frozenset({(2, 0), (0, 1)})))
    assert text == "D 3 2\n0 1\n2 0\n"


def test_labelling_round_trip():
    f = VertexLabelling((0, 1, 1, 0))
    assert parse_labelling_text(format_labelling_text(f)) == f
    assert parse_labelling_text("L 2\n1 1\n0 0\n", Scope.ALL) == VertexLabelling((0, 1), Scope.ALL)


@pytest.mark.parametrize(
    "text", ["", "X 1\n0 0\n", "L 2\n0 1\n", "L 1\n0 2\n", "L 2\n0 1\n0 0\n", "L 1\n3 0\n"]
)
def test_labelling_errors(text):
    with pytest.raises(ParseError):
        parse_labelling_text(text)


def test_dot_plain():
    dot = to_dot(Graph(2, frozenset({(0, 1)})), name="g")
    assert dot.startswith("graph g {") and "0 -- 1;" in dot


def test_dot_labelled(sample5):
    d, f = sample5
    dot = to_dot(d, f)
    assert dot.startswith("digraph G {")
    assert '0 -> 2 [label="+1"];' in dot
    assert '3 -> 0 [label="-1"];' in dot
    assert '0 -> 1 [label="0"];' in dot
    assert '2 [label="v2: 1"];' in dot


def test_dot_unlabelled_digraph():
    dot = to_dot(gen_cycle_out_wheel(4))
    assert "3 -> 0;" in dot and dot.rstrip().endswith("}")
