"""Randomized agreement between the fast routines and their reference oracles."""

import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from cfc_lab.alpha import independence_number, independence_number_exhaustive
from cfc_lab.canonical import canonical_form
from cfc_lab.coloring import EdgeColoring, exists_conflict_free_path, exists_conflict_free_path_oracle
from cfc_lab.formats import to_networkx
from cfc_lab.graph import Graph, bridges_oracle, cut_edges, is_connected
from cfc_lab.solver import cfc_exact


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        chosen = sorted(set(chosen) | {(i, i + 1) for i in range(n - 1)})
    return Graph(n, chosen)


@st.composite
def relabelings(draw, g):
    permutation = draw(st.permutations(list(range(g.n))))
    return Graph(g.n, [(permutation[u], permutation[v]) for u, v in g.edges])


@given(graphs(max_n=9))
def test_cut_edges_agree_with_oracles(g):
    fast = cut_edges(g)
    assert fast == bridges_oracle(g)
    assert fast == {g.edge_index(u, v) for u, v in nx.bridges(to_networkx(g))}


@given(st.data())
def test_canonical_form_is_a_relabeling_invariant(data):
    g = data.draw(graphs())
    assert canonical_form(data.draw(relabelings(g))) == canonical_form(g)


@given(graphs(max_n=6), graphs(max_n=6))
def test_canonical_forms_decide_isomorphism(g, h):
    same = canonical_form(g) == canonical_form(h)
    assert same == nx.is_isomorphic(to_networkx(g), to_networkx(h))


@given(graphs(max_n=10))
def test_alpha_matches_exhaustive(g):
    fast = independence_number(g)
    assert fast.value == independence_number_exhaustive(g).value
    assert len(fast.witness) == fast.value


@given(st.data())
def test_pair_witness_agrees_with_path_enumeration(data):
    g = data.draw(graphs(min_n=2, max_n=6, connected=True))
    if g.m == 0:
        return
    colors = data.draw(st.lists(st.integers(1, 3), min_size=g.m, max_size=g.m))
    coloring = EdgeColoring(g, tuple(colors))
    u, v = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    fast = exists_conflict_free_path(coloring, u, v)
    oracle = exists_conflict_free_path_oracle(coloring, u, v)
    assert (fast is None) == (oracle is None)


@given(st.data())
def test_cfc_is_a_relabeling_invariant(data):
    g = data.draw(graphs(min_n=2, max_n=6, connected=True))
    assert is_connected(g)
    h = data.draw(relabelings(g))
    assert cfc_exact(h).value == cfc_exact(g).value
