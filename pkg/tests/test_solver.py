import math

import pytest

from cfc_lab.coloring import is_conflict_free_connected
from cfc_lab.errors import (
    BudgetExceeded,
    Disconnected,
    GraphError,
    HTooSmall,
    NoCutEdges,
    NotATree,
    TooLarge,
)
from cfc_lab.families import complete_graph, cycle, g_lk, h_graph, path, q_graph, star
from cfc_lab.graph import Graph
from cfc_lab.solver import (
    SearchStats,
    cfc_exact,
    cfc_lower_bound,
    elementary_lower_bound,
    find_coloring,
    h_value,
    iter_optimal_colorings,
    lemma7_upper_bound,
    log_diameter_bound,
    pair_relevance,
    satisfies_lemma5,
    theorem2_hypothesis,
)


def pendant_cycle(left: int, right: int) -> Graph:
    """C_4 on 0..3 with ``left`` leaves on vertex 0 and ``right`` leaves on vertex 2."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    n = 4
    for center, count in ((0, left), (2, right)):
        for _ in range(count):
            edges.append((center, n))
            n += 1
    return Graph(n, edges)


@pytest.mark.parametrize("m,expected", list(zip(range(1, 11), (1, 2, 2, 3, 3, 3, 3, 4, 4, 4))))
def test_paths_need_ceil_log2(m, expected):
    assert expected == math.ceil(math.log2(m + 1))
    result = cfc_exact(path(m))
    assert result.value == expected
    assert cfc_exact(path(m), trust_cited_bounds=False).value == expected


@pytest.mark.parametrize("g,expected", [
    (complete_graph(2), 1),
    (complete_graph(5), 1),
    (star(7), 6),
    (cycle(5), 2),
    (h_graph(3), 3),
    (h_graph(4), 4),
    (q_graph(3), 3),
    (g_lk(8, 5, 3), 3),
])
def test_known_values(g, expected):
    result = cfc_exact(g)
    assert result.value == expected
    assert result.witness.palette_size == expected
    assert is_conflict_free_connected(result.witness).passed
    assert result.lower_bound <= expected


def test_witness_is_normalized_and_stats_are_recorded():
    result = cfc_exact(h_graph(3), trust_cited_bounds=False)
    assert result.witness.normalized() == result.witness
    assert result.stats.budgets_tried[-1] == 3
    assert result.stats.nodes > 0
    assert set(result.stats.to_dict()) >= {"colorings_examined", "nodes", "prunes", "wall_time"}


def test_budget_cap():
    with pytest.raises(BudgetExceeded) as info:
        cfc_exact(star(5), budget_cap=3)
    assert info.value.cap == 3


def test_size_and_shape_limits():
    with pytest.raises(TooLarge):
        cfc_exact(path(21))
    with pytest.raises(Disconnected):
        cfc_exact(Graph(3, [(0, 1)]))
    with pytest.raises(GraphError):
        cfc_exact(Graph(1, []))


def test_find_coloring_honors_pins():
    found = find_coloring(path(3), 2, fixed={1: 1})
    assert found is not None
    assert found.colors[1] == 1
    assert is_conflict_free_connected(found).passed
    assert find_coloring(path(3), 2, fixed={0: 3}) is None
    assert find_coloring(path(3), 1) is None


def test_find_coloring_collects_stats():
    stats = SearchStats()
    find_coloring(cycle(6), 2, stats=stats)
    assert stats.nodes > 0


def test_optimal_colorings_of_short_path():
    assert [c.colors for c in iter_optimal_colorings(path(3))] == [(1, 2, 1)]


def test_pair_relevance_on_a_tree():
    relevance = pair_relevance(path(3))
    assert relevance[(0, 3)] == frozenset({0, 1, 2})
    assert (0, 1) not in relevance


def test_lower_bounds(lollipop):
    assert elementary_lower_bound(complete_graph(4)) == 1
    assert elementary_lower_bound(lollipop) == 2
    assert elementary_lower_bound(pendant_cycle(3, 1)) == 3
    assert log_diameter_bound(path(9)) == 4
    assert log_diameter_bound(path(1)) == 0
    assert cfc_lower_bound(star(6)) == 5
    assert cfc_lower_bound(path(8)) == 3


def test_h_value_and_lemma5_condition():
    unique = pendant_cycle(3, 1)
    assert h_value(unique) == 3
    assert satisfies_lemma5(unique)
    assert cfc_exact(unique).value == 3

    tied = pendant_cycle(3, 3)
    assert h_value(tied, trust_cited_bounds=False) == 3
    assert not satisfies_lemma5(tied, trust_cited_bounds=False)


def test_lemma5_needs_cut_edges_and_h_at_least_two(lollipop):
    with pytest.raises(NoCutEdges):
        h_value(cycle(5))
    with pytest.raises(HTooSmall):
        satisfies_lemma5(lollipop)


def test_tree_upper_bound():
    assert lemma7_upper_bound(star(4)) == pytest.approx(2 / (math.log2(3) - 1))
    with pytest.raises(NotATree):
        lemma7_upper_bound(cycle(4))
    with pytest.raises(GraphError):
        lemma7_upper_bound(path(5))


def test_degree_hypothesis():
    assert theorem2_hypothesis(3, 4)
    assert not theorem2_hypothesis(2, 3)
    assert theorem2_hypothesis(2, 2)


@pytest.mark.slow
def test_petersen_needs_two_colors(petersen):
    assert cfc_exact(petersen).value == 2
