import pytest

from cfc_lab.alpha import independence_number, independence_number_exhaustive, is_independent
from cfc_lab.errors import EmptyGraph, TooLarge
from cfc_lab.families import complete_graph, cycle, g_lk, h_graph, path, q_graph, remark2_tree, star
from cfc_lab.graph import Graph


@pytest.mark.parametrize("g,expected", [
    (complete_graph(5), 1),
    (star(6), 5),
    (cycle(5), 2),
    (cycle(6), 3),
    (path(4), 3),
    (h_graph(3), 4),
    (q_graph(4), 6),
    (g_lk(8, 5, 3), 5),
    (remark2_tree(3), 5),
    (Graph(3, []), 3),
])
def test_known_values(g, expected):
    result = independence_number(g)
    assert result.value == expected
    assert len(result.witness) == expected
    assert is_independent(g, result.witness)


def test_petersen(petersen):
    assert independence_number(petersen).value == 4
    assert independence_number_exhaustive(petersen).value == 4


def test_large_tree_is_fast():
    assert independence_number(path(59)).value == 30


def test_errors():
    with pytest.raises(EmptyGraph):
        independence_number(Graph(0, []))
    with pytest.raises(TooLarge):
        independence_number_exhaustive(path(20))
