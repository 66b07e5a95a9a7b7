import pytest

from cfc_lab.coloring import EdgeColoring
from cfc_lab.errors import DuplicateEdge, FormatError
from cfc_lab.families import cycle, h_graph, path, q_graph
from cfc_lab.formats import (
    format_colored_edge_list,
    format_edge_list,
    format_graph,
    format_graph6,
    parse_colored_edge_list,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    read_text,
    write_text,
)
from cfc_lab.graph import Graph


def test_edge_list_with_comments():
    text = "# a path\n3 2\n0 1  # first edge\n\n1 2\n"
    assert parse_edge_list(text) == path(2)


def test_edge_list_output():
    assert format_edge_list(path(2)) == "3 2\n0 1\n1 2\n"


@pytest.mark.parametrize("text,line", [
    ("3 2\n0 1\n1 x\n", 3),
    ("3\n0 1\n", 1),
    ("3 1\n0 1 2\n", 2),
])
def test_malformed_lines_report_their_number(text, line):
    with pytest.raises(FormatError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_edge_count_mismatch():
    with pytest.raises(FormatError):
        parse_edge_list("3 3\n0 1\n1 2\n")
    with pytest.raises(FormatError):
        parse_edge_list("")


def test_structural_errors_pass_through():
    with pytest.raises(DuplicateEdge):
        parse_edge_list("3 2\n0 1\n1 0\n")


def test_colored_edge_list(h3_coloring):
    text = format_colored_edge_list(h3_coloring)
    assert text.splitlines()[0] == "7 6"
    assert parse_colored_edge_list(text) == h3_coloring


def test_colored_edge_list_accepts_any_edge_order():
    parsed = parse_colored_edge_list("3 2\n2 1 5\n0 1 4\n")
    assert parsed == EdgeColoring(path(2), (4, 5))


@pytest.mark.parametrize("g", [path(6), cycle(5), h_graph(4), q_graph(3), Graph(1, [])])
def test_graph6_is_graph_identical(g):
    assert parse_graph6(format_graph6(g)) == g


def test_graph6_header_and_errors():
    body = format_graph6(cycle(4)).strip()
    assert parse_graph6(">>graph6<<" + body) == cycle(4)
    with pytest.raises(FormatError):
        parse_graph6("")
    with pytest.raises(FormatError):
        parse_graph6(body + "\n" + body)


def test_format_sniffing():
    assert parse_graph(format_edge_list(cycle(5))) == cycle(5)
    assert parse_graph(format_graph6(cycle(5))) == cycle(5)
    assert parse_graph(format_graph(cycle(5), "g6"), "g6") == cycle(5)
    with pytest.raises(FormatError):
        parse_graph("3 0\n", "xml")


def test_file_round_trip(tmp_path):
    target = tmp_path / "g.el"
    write_text(str(target), format_edge_list(q_graph(4)))
    assert parse_graph(read_text(str(target))) == q_graph(4)
