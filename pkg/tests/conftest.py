"""Shared fixtures for the cfc_lab test-suite."""

import pytest
from hypothesis import settings

from cfc_lab.coloring import EdgeColoring
from cfc_lab.construct import color_H
from cfc_lab.graph import Graph
from cfc_lab.harness import CorpusBounds
from cfc_lab.logging_config import configure_logging

settings.register_profile("cfc", deadline=None, max_examples=40)
settings.load_profile("cfc")

configure_logging("WARNING")


@pytest.fixture
def lollipop() -> Graph:
    """Triangle 0-1-2 with a pendant edge 2-3."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


@pytest.fixture
def h3_coloring() -> EdgeColoring:
    return color_H(3)


@pytest.fixture
def small_bounds() -> CorpusBounds:
    return CorpusBounds(
        max_n_graphs=4,
        max_n_trees=5,
        path_max_edges=4,
        hq_exact_max_k=3,
        hq_verify_max_k=4,
        example1_n=5,
        lemma9_max_n=5,
        lemma9_samples=2,
        random_trees=3,
        random_tree_max_n=12,
        remark1_ks=[3],
        remark2_ks=[3],
    )


def relabel(g: Graph, permutation) -> Graph:
    return Graph(g.n, [(permutation[u], permutation[v]) for u, v in g.edges])


@pytest.fixture
def relabeled():
    return relabel
