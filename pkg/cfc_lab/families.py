"""
🌳 GRAPH FAMILIES
Generators for the named families and exhaustive non-isomorphic enumeration of small
trees and connected graphs.

Labeling conventions:
- star(n): center 0, leaves 1..n-1.
- path(m): vertices 0..m in order.
- cycle(n): vertices 0..n-1 in cyclic order.
- H_k: center 0, legs u_i = i, leg ends v_i = k + i (1 <= i <= k).
- Q_k: H_k plus w_i = 2k + i - 2 joined to v_i for 3 <= i <= k.
- G_{l,k} with k < l: w = 0, v = 1, u_i = i + 1 (1 <= i <= n - 2).
- G_{l,k} with k = l: star center 0 with leaves 1..l, clique on l..n-1.
- remark1(k): two stars K_{1,k-1} centered at 0 and k sharing leaf k-1.
- remark2(k): stars K_{1,k} centered at 0 and k+1 joined by the edge (k, k+2).
"""

import heapq
import math
import random
from dataclasses import dataclass, replace
from enum import Enum
from itertools import combinations, product
from typing import Callable, Dict, Iterator, List, Optional

import structlog

from .alpha import independence_number
from .canonical import canonical_form
from .errors import BadParameters, TooLarge
from .graph import Edge, Graph, add_vertex, is_connected, max_degree, remove_vertices

logger = structlog.get_logger(__name__)

TREE_ENUM_LIMIT = 12
GRAPH_ENUM_LIMIT = 7
PRUFER_LIMIT = 8
SUBSET_LIMIT = 6


class Family(str, Enum):
    COMPLETE = "complete"
    STAR = "star"
    PATH = "path"
    CYCLE = "cycle"
    H = "H"
    Q = "Q"
    G_LK = "G_lk"
    REMARK1 = "remark1"
    REMARK2 = "remark2"
    RANDOM_TREE = "random_tree"
    RANDOM_QUALIFYING_TREE = "random_qualifying_tree"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: Optional[int] = None
    k: Optional[int] = None
    l: Optional[int] = None  # noqa: E741
    m: Optional[int] = None
    seed: Optional[int] = None


def _need(value: Optional[int], name: str, family: Family, minimum: int) -> int:
    if value is None:
        raise BadParameters(f"{family.value} needs parameter {name}")
    if value < minimum:
        raise BadParameters(f"{family.value}: {name}={value}, need {name} >= {minimum}")
    return value


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """K_{1,n-1} on n vertices."""
    return Graph(n, [(0, i) for i in range(1, n)])


def path(m: int) -> Graph:
    """Path with m edges."""
    return Graph(m + 1, [(i, i + 1) for i in range(m)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def h_graph(k: int) -> Graph:
    edges = [(0, i) for i in range(1, k + 1)] + [(i, k + i) for i in range(1, k + 1)]
    return Graph(2 * k + 1, edges)


def q_leaf(k: int, i: int) -> int:
    """Label of w_i in Q_k."""
    return 2 * k + i - 2


def q_graph(k: int) -> Graph:
    edges = list(h_graph(k).edges) + [(k + i, q_leaf(k, i)) for i in range(3, k + 1)]
    return Graph(3 * k - 1, edges)


def g_lk(n: int, l: int, k: int) -> Graph:  # noqa: E741
    """Graph with independence number l and cfc k."""
    if not (3 <= l <= n - 2 and 2 <= k <= l):
        raise BadParameters(f"G_lk needs 3 <= l <= n-2 and 2 <= k <= l, got n={n} l={l} k={k}")
    if k == l:
        edges = [(0, i) for i in range(1, l + 1)]
        edges += list(combinations(range(l, n), 2))
        return Graph(n, edges)
    w, v = 0, 1

    def u(i: int) -> int:
        return i + 1

    edges = [(w, u(i)) for i in range(1, n - 1)]
    edges += [(v, u(i)) for i in range(k + 1, n - 1)]
    edges.append((w, v))
    edges += [(u(i), u(j)) for i, j in combinations(range(l, n - 1), 2)]
    return Graph(n, edges)


def remark1_tree(k: int) -> Graph:
    left = [(0, i) for i in range(1, k)]
    right = [(k, k - 1)] + [(k, i) for i in range(k + 1, 2 * k - 1)]
    return Graph(2 * k - 1, left + right)


def remark2_tree(k: int) -> Graph:
    left = [(0, i) for i in range(1, k + 1)]
    right = [(k + 1, i) for i in range(k + 2, 2 * k + 2)]
    return Graph(2 * k + 2, left + right + [(k, k + 2)])


def prufer_to_edges(sequence: List[int], n: int) -> List[Edge]:
    """Decode a Prüfer sequence of length n-2 over 0..n-1."""
    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges: List[Edge] = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree from a seeded random Prüfer sequence."""
    if n < 1:
        raise BadParameters(f"random_tree needs n >= 1, got {n}")
    if n <= 2:
        return path(n - 1)
    rng = random.Random(seed)
    return Graph(n, prufer_to_edges([rng.randrange(n) for _ in range(n - 2)], n))


def try_random_qualifying_tree(n: int, seed: int, attempts: int = 200) -> Optional[Graph]:
    """Seeded tree with 2Δ >= α + 2, grown from a star by random attachment; None if
    every attempt is rejected."""
    if n < 3:
        raise BadParameters(f"random_qualifying_tree needs n >= 3, got {n}")
    rng = random.Random(seed)
    for _ in range(attempts):
        k = rng.randint(max(2, math.ceil(n / 3)), n - 1)
        edges = [(0, i) for i in range(1, k + 1)]
        degree = [k] + [1] * k
        for x in range(k + 1, n):
            candidates = [y for y in range(1, x) if degree[y] < k - 1] or list(range(1, x))
            parent = rng.choice(candidates)
            edges.append((parent, x))
            degree[parent] += 1
            degree.append(1)
        t = Graph(n, edges)
        if 2 * max_degree(t) >= independence_number(t).value + 2:
            return t
    return None


def random_qualifying_tree(n: int, seed: int, attempts: int = 200) -> Graph:
    """Like try_random_qualifying_tree, with the star K_{1,n-1} as the fallback."""
    t = try_random_qualifying_tree(n, seed, attempts)
    if t is None:
        logger.warning("🎲 rejection sampling exhausted, falling back to a star",
                       n=n, seed=seed, attempts=attempts)
        return star(n)
    return t


def random_connected_graph(n: int, seed: int, extra_edge_prob: float = 0.3) -> Graph:
    rng = random.Random(seed)
    base = random_tree(n, rng.randrange(2 ** 31))
    edges = set(base.edges)
    for pair in combinations(range(n), 2):
        if pair not in edges and rng.random() < extra_edge_prob:
            edges.add(pair)
    return Graph(n, edges)


def random_subtree(t: Graph, rng: random.Random, deletions: Optional[int] = None) -> Graph:
    """Subtree of t obtained by deleting leaves one at a time."""
    if deletions is None:
        deletions = rng.randint(0, max(0, t.n - 2))
    current = t
    for _ in range(min(deletions, t.n - 1)):
        leaves = [v for v in range(current.n) if current.degree(v) <= 1]
        current = remove_vertices(current, [rng.choice(leaves)]).graph
    return current


def _gen_g_lk(s: FamilySpec) -> Graph:
    l = _need(s.l, "l", s.family, 3)  # noqa: E741
    k = _need(s.k, "k", s.family, 2)
    n = s.n if s.n is not None else l + 3
    return g_lk(n, l, k)


_GENERATORS: Dict[Family, Callable[[FamilySpec], Graph]] = {
    Family.COMPLETE: lambda s: complete_graph(_need(s.n, "n", s.family, 1)),
    Family.STAR: lambda s: star(_need(s.n, "n", s.family, 2)),
    Family.PATH: lambda s: path(_need(s.m, "m", s.family, 1)),
    Family.CYCLE: lambda s: cycle(_need(s.n, "n", s.family, 3)),
    Family.H: lambda s: h_graph(_need(s.k, "k", s.family, 3)),
    Family.Q: lambda s: q_graph(_need(s.k, "k", s.family, 3)),
    Family.G_LK: _gen_g_lk,
    Family.REMARK1: lambda s: remark1_tree(_need(s.k, "k", s.family, 3)),
    Family.REMARK2: lambda s: remark2_tree(_need(s.k, "k", s.family, 3)),
    Family.RANDOM_TREE: lambda s: random_tree(_need(s.n, "n", s.family, 1), s.seed or 0),
    Family.RANDOM_QUALIFYING_TREE: lambda s: random_qualifying_tree(
        _need(s.n, "n", s.family, 3), s.seed or 0
    ),
}


def gen(spec: FamilySpec) -> Graph:
    """Build the graph a FamilySpec describes."""
    spec = replace(spec, family=Family(spec.family))
    return _GENERATORS[spec.family](spec)


def _dedupe(graphs) -> List[Graph]:
    unique: Dict[bytes, Graph] = {}
    for g in graphs:
        unique.setdefault(canonical_form(g), g)
    return [unique[key] for key in sorted(unique)]


def _trees_by_augmentation(n: int) -> List[Graph]:
    level = [Graph(1, [])]
    for size in range(2, n + 1):
        level = _dedupe(
            Graph(size, list(t.edges) + [(v, size - 1)]) for t in level for v in range(t.n)
        )
    return level


def _trees_by_prufer(n: int) -> List[Graph]:
    if n > PRUFER_LIMIT:
        raise TooLarge("Prüfer enumeration order", n, PRUFER_LIMIT)
    if n <= 2:
        return [path(n - 1)]
    return _dedupe(
        Graph(n, prufer_to_edges(list(seq), n)) for seq in product(range(n), repeat=n - 2)
    )


def _rooted_level_sequences(n: int) -> Iterator[List[int]]:
    """Canonical level sequences of rooted trees on n vertices, path first, star last."""
    levels = list(range(n))
    while True:
        yield list(levels)
        p = max(i for i in range(n) if levels[i] != 1)
        if p == 0:
            return
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]


def _tree_from_levels(levels: List[int]) -> Graph:
    last_at: Dict[int, int] = {}
    edges = []
    for i, level in enumerate(levels):
        if level > 0:
            edges.append((last_at[level - 1], i))
        last_at[level] = i
    return Graph(len(levels), edges)


def _trees_by_level_sequences(n: int) -> List[Graph]:
    return _dedupe(_tree_from_levels(levels) for levels in _rooted_level_sequences(n))


def enumerate_trees(n: int, method: str = "augment") -> List[Graph]:
    """All non-isomorphic trees on n vertices, sorted by canonical form."""
    if n < 1:
        raise BadParameters(f"need n >= 1, got {n}")
    if n > TREE_ENUM_LIMIT:
        raise TooLarge("tree order", n, TREE_ENUM_LIMIT)
    builders = {
        "augment": _trees_by_augmentation,
        "levels": _trees_by_level_sequences,
        "prufer": _trees_by_prufer,
    }
    if method not in builders:
        raise BadParameters(f"unknown tree enumeration method {method!r}")
    trees = builders[method](n)
    logger.debug("🌳 trees enumerated", n=n, method=method, count=len(trees))
    return trees


def _graphs_by_vertex_addition(n: int) -> List[Graph]:
    level = [Graph(1, [])]
    for _ in range(2, n + 1):
        level = _dedupe(
            add_vertex(g, [v for v in range(g.n) if (mask >> v) & 1])
            for g in level
            for mask in range(1, 1 << g.n)
        )
    return level


def _graphs_by_edge_subsets(n: int) -> List[Graph]:
    if n > SUBSET_LIMIT:
        raise TooLarge("edge-subset enumeration order", n, SUBSET_LIMIT)
    pairs = list(combinations(range(n), 2))
    candidates = (
        Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])
        for mask in range(1 << len(pairs))
    )
    return _dedupe(g for g in candidates if is_connected(g))


def enumerate_connected_graphs(n: int, method: str = "augment") -> List[Graph]:
    """All non-isomorphic connected graphs on n vertices, sorted by canonical form."""
    if n < 1:
        raise BadParameters(f"need n >= 1, got {n}")
    if n > GRAPH_ENUM_LIMIT:
        raise TooLarge("graph order", n, GRAPH_ENUM_LIMIT)
    builders = {"augment": _graphs_by_vertex_addition, "subsets": _graphs_by_edge_subsets}
    if method not in builders:
        raise BadParameters(f"unknown graph enumeration method {method!r}")
    graphs = builders[method](n)
    logger.debug("🕸️ connected graphs enumerated", n=n, method=method, count=len(graphs))
    return graphs
