import random
from itertools import product

import pytest

from cfc_lab.coloring import (
    Certificate,
    EdgeColoring,
    exists_conflict_free_path,
    exists_conflict_free_path_oracle,
    is_conflict_free_connected,
    is_conflict_free_path,
    iter_simple_paths,
    path_through_edge,
    verify_certificate,
)
from cfc_lab.errors import (
    Disconnected,
    InvalidColoring,
    NotAPath,
    NotSimple,
    PathExplosion,
    SameVertex,
    VertexOutOfRange,
)
from cfc_lab.families import (
    complete_graph,
    cycle,
    enumerate_connected_graphs,
    enumerate_trees,
    path,
    random_connected_graph,
    star,
)
from cfc_lab.flow import bfs_path, vertex_disjoint_pair
from cfc_lab.graph import Graph, induced_subgraph


def test_coloring_validation():
    with pytest.raises(InvalidColoring):
        EdgeColoring(path(3), (1, 2))
    with pytest.raises(InvalidColoring):
        EdgeColoring(path(2), (0, 1))
    with pytest.raises(InvalidColoring):
        EdgeColoring.from_mapping(path(2), {(0, 1): 1})


def test_coloring_helpers():
    c = EdgeColoring(path(3), (3, 3, 5))
    assert c.palette_size == 2
    assert c.normalized().colors == (1, 1, 2)
    assert c.color_classes() == {3: [0, 1], 5: [2]}
    assert c.color_of(3, 2) == 5
    sub = induced_subgraph(path(3), [1, 2, 3])
    assert c.restrict(sub).colors == (3, 5)


def test_conflict_free_path_checks():
    c = EdgeColoring(path(3), (1, 2, 1))
    assert is_conflict_free_path(c, [0, 1, 2, 3])
    assert not is_conflict_free_path(EdgeColoring(path(3), (1, 1, 1)), [0, 1, 2])
    assert not is_conflict_free_path(c, [2])
    with pytest.raises(NotSimple):
        is_conflict_free_path(c, [0, 1, 0])
    with pytest.raises(NotAPath):
        is_conflict_free_path(c, [0, 2])


def test_pair_argument_errors():
    c = EdgeColoring.rainbow(path(2))
    with pytest.raises(SameVertex):
        exists_conflict_free_path(c, 1, 1)
    with pytest.raises(VertexOutOfRange):
        exists_conflict_free_path(c, 0, 3)


def test_h3_certificate(h3_coloring):
    cert = is_conflict_free_connected(h3_coloring)
    assert cert.passed
    assert len(cert.pairs) == 21
    assert verify_certificate(h3_coloring, cert)
    assert verify_certificate(h3_coloring, Certificate.model_validate_json(cert.model_dump_json()))


def test_tampered_certificate_is_rejected(h3_coloring):
    cert = is_conflict_free_connected(h3_coloring)
    broken = cert.model_copy(deep=True)
    broken.pairs.pop()
    assert not verify_certificate(h3_coloring, broken)
    wrong_pivot = cert.model_copy(deep=True)
    wrong_pivot.pairs[0].pivot_color = 99
    assert not verify_certificate(h3_coloring, wrong_pivot)


def test_monochromatic_path_fails_at_first_pair():
    cert = is_conflict_free_connected(EdgeColoring(path(3), (1, 1, 1)))
    assert not cert.passed
    assert cert.failing_pair == (0, 2)
    assert not verify_certificate(EdgeColoring(path(3), (1, 1, 1)), cert)


def test_monochromatic_complete_graph_passes():
    assert is_conflict_free_connected(EdgeColoring(complete_graph(4), (1,) * 6)).passed


def test_two_colored_cycle_needs_a_detour():
    # C_5 with a single color-2 edge: every pair can route through it or use a 1-edge path.
    c = EdgeColoring(cycle(5), (2, 1, 1, 1, 1))
    assert is_conflict_free_connected(c).passed
    witness = exists_conflict_free_path(c, 2, 4)
    assert witness is not None
    assert is_conflict_free_path(c, witness.path)
    assert {witness.path[0], witness.path[-1]} == {2, 4}


def test_checker_agrees_with_enumeration():
    c = EdgeColoring(cycle(6), (1, 1, 2, 2, 1, 1))
    for u in range(6):
        for v in range(u + 1, 6):
            fast = exists_conflict_free_path(c, u, v)
            slow = exists_conflict_free_path_oracle(c, u, v)
            assert (fast is None) == (slow is None)


def test_disconnected_coloring():
    with pytest.raises(Disconnected):
        is_conflict_free_connected(EdgeColoring(Graph(3, [(0, 1)]), (1,)))


def test_path_enumeration_and_cap():
    assert sorted(iter_simple_paths(cycle(4), 0, 2)) == [[0, 1, 2], [0, 3, 2]]
    dense = Graph(7, [e for e in complete_graph(7).edges if e != (0, 1)])
    with pytest.raises(PathExplosion):
        exists_conflict_free_path_oracle(EdgeColoring(dense, (1,) * dense.m), 0, 1, cap=3)


def test_path_through_edge_uses_the_pivot():
    g = cycle(5)
    e = g.edge_index(3, 4)
    found = path_through_edge(g, lambda f: True, 0, 2, e)
    assert found == [0, 4, 3, 2]
    assert path_through_edge(star(4), lambda f: True, 1, 2, star(4).edge_index(0, 3)) is None


def test_flow_helpers():
    g = cycle(6)

    def nbrs(w):
        return g.adjacency[w]

    assert bfs_path(6, nbrs, 0, 3, banned={1}) == [0, 5, 4, 3]
    assert bfs_path(6, nbrs, 0, 3, banned={1, 5}) is None
    pair = vertex_disjoint_pair(6, nbrs, (0, 3), (1, 2))
    assert pair is not None
    left, right = pair
    assert left[0] == 0 and right[0] == 3
    assert {left[-1], right[-1]} == {1, 2}
    assert not set(left) & set(right)


def _assert_checker_matches_oracle(coloring: EdgeColoring) -> int:
    n = coloring.graph.n
    for u in range(n):
        for v in range(u + 1, n):
            fast = exists_conflict_free_path(coloring, u, v)
            oracle = exists_conflict_free_path_oracle(coloring, u, v)
            assert (fast is None) == (oracle is None), (coloring.graph.edges, coloring.colors, u, v)
            if fast is not None:
                assert fast.path[0] == u and fast.path[-1] == v
                assert is_conflict_free_path(coloring, fast.path)
    return n * (n - 1) // 2


def _graphs_with_at_most_six_edges():
    for n in range(2, 7):
        yield from (g for g in enumerate_connected_graphs(n) if g.m <= 6)
    yield from enumerate_trees(7)


@pytest.mark.slow
def test_checker_matches_oracle_on_every_two_coloring_of_small_graphs():
    pairs = 0
    for g in _graphs_with_at_most_six_edges():
        for colors in product((1, 2), repeat=g.m):
            pairs += _assert_checker_matches_oracle(EdgeColoring(g, colors))
    assert pairs == 36326


@pytest.mark.slow
def test_checker_matches_oracle_on_seeded_random_colorings():
    rng = random.Random(2024)
    for _ in range(500):
        g = random_connected_graph(rng.randint(2, 7), rng.randrange(2 ** 31))
        palette = rng.randint(1, 4)
        coloring = EdgeColoring(g, tuple(rng.randint(1, palette) for _ in range(g.m)))
        _assert_checker_matches_oracle(coloring)
