"""
🔍 EXACT CONFLICT-FREE CONNECTION NUMBER
Lower bounds, iterative deepening over palette sizes, and the h(G) machinery.

Colorings are enumerated in first-appearance order (an edge may use at most one more
than the largest color seen so far). A vertex pair is tested as soon as every edge that
lies on some simple path between its endpoints is colored; a failing pair prunes the
whole subtree.
"""

import math
import time
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Tuple

import structlog

from .coloring import (
    EdgeColoring,
    is_conflict_free_connected,
    pair_witness,
    path_edge_ids,
    path_through_edge,
    unique_color,
)
from .config import DEFAULT_CONFIG, LabConfig
from .errors import (
    BudgetExceeded,
    GraphError,
    HTooSmall,
    InvariantViolation,
    NoCutEdges,
    NotATree,
    TooLarge,
)
from .graph import (
    Graph,
    components,
    cut_edge_subgraph,
    cut_edges,
    diameter,
    is_complete,
    is_forest,
    is_tree,
    max_degree,
    path_between,
    require_connected,
)

logger = structlog.get_logger(__name__)

Pair = Tuple[int, int]


@dataclass
class SearchStats:
    colorings_examined: int = 0
    nodes: int = 0
    prunes: int = 0
    pair_checks: int = 0
    budgets_tried: List[int] = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)


@dataclass
class CfcResult:
    value: int
    witness: EdgeColoring
    lower_bound: int
    stats: SearchStats


def _all_edges(_: int) -> bool:
    return True


@lru_cache(maxsize=512)
def pair_relevance(g: Graph) -> Dict[Pair, FrozenSet[int]]:
    """For each non-adjacent pair, the edges lying on at least one simple path between them."""
    relevance: Dict[Pair, FrozenSet[int]] = {}
    forest = is_forest(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            if forest:
                path = path_between(g, u, v)
                relevance[(u, v)] = frozenset(path_edge_ids(g, path)) if path else frozenset()
                continue
            relevance[(u, v)] = frozenset(
                e for e in range(g.m) if path_through_edge(g, _all_edges, u, v, e) is not None
            )
    return relevance


class _ColoringSearch:
    """Depth-first search over first-appearance colorings with at most ``budget`` colors."""

    def __init__(self, g: Graph, budget: int, stats: SearchStats,
                 fixed: Optional[Mapping[int, int]] = None):
        fixed = dict(fixed or {})
        self.g = g
        self.budget = budget
        self.stats = stats
        self.colors = [0] * g.m
        for e, c in fixed.items():
            self.colors[e] = c
        self.max_fixed = max(fixed.values(), default=0)
        self.free = [e for e in range(g.m) if e not in fixed]
        position = {e: i for i, e in enumerate(self.free)}
        self.ready_at: List[List[Pair]] = [[] for _ in self.free]
        self.ready_now: List[Pair] = []
        for pair, edges in pair_relevance(g).items():
            slots = [position[e] for e in edges if e in position]
            if slots:
                self.ready_at[max(slots)].append(pair)
            else:
                self.ready_now.append(pair)
        self.cache: Dict[Pair, List[int]] = {}

    def _pair_ok(self, pair: Pair) -> bool:
        cached = self.cache.get(pair)
        if cached is not None and unique_color(self.colors, cached) is not None:
            return True
        self.stats.pair_checks += 1
        found = pair_witness(self.g, self.colors, *pair)
        if found is None:
            return False
        self.cache[pair] = path_edge_ids(self.g, found.path)
        return True

    def solutions(self) -> Iterator[Tuple[int, ...]]:
        if not all(self._pair_ok(p) for p in self.ready_now):
            self.stats.prunes += 1
            return
        yield from self._extend(0, self.max_fixed)

    def _extend(self, slot: int, top: int) -> Iterator[Tuple[int, ...]]:
        if slot == len(self.free):
            self.stats.colorings_examined += 1
            yield tuple(self.colors)
            return
        e = self.free[slot]
        for c in range(1, min(self.budget, top + 1) + 1):
            self.colors[e] = c
            self.stats.nodes += 1
            if all(self._pair_ok(p) for p in self.ready_at[slot]):
                yield from self._extend(slot + 1, max(top, c))
            else:
                self.stats.prunes += 1
        self.colors[e] = 0


def _check_size(g: Graph, config: LabConfig) -> None:
    require_connected(g)
    if g.n < 2:
        raise GraphError("need at least two vertices")
    if g.m > config.edge_limit:
        raise TooLarge("edge count", g.m, config.edge_limit)


def find_coloring(g: Graph, budget: int, fixed: Optional[Mapping[int, int]] = None,
                  stats: Optional[SearchStats] = None,
                  config: LabConfig = DEFAULT_CONFIG) -> Optional[EdgeColoring]:
    """First conflict-free coloring with colors in 1..budget that keeps ``fixed`` pins."""
    _check_size(g, config)
    if fixed and any(c < 1 or c > budget for c in fixed.values()):
        return None
    search = _ColoringSearch(g, budget, stats or SearchStats(), fixed)
    found = next(search.solutions(), None)
    return EdgeColoring(g, found) if found is not None else None


def iter_colorings(g: Graph, budget: int, config: LabConfig = DEFAULT_CONFIG) -> Iterator[EdgeColoring]:
    """Every conflict-free coloring within ``budget`` colors, in first-appearance form."""
    _check_size(g, config)
    for colors in _ColoringSearch(g, budget, SearchStats()).solutions():
        yield EdgeColoring(g, colors)


def iter_optimal_colorings(g: Graph, k: Optional[int] = None,
                           config: LabConfig = DEFAULT_CONFIG) -> Iterator[EdgeColoring]:
    """Every optimal coloring; ``k`` defaults to cfc(g)."""
    if k is None:
        k = cfc_exact(g, trust_cited_bounds=False, config=config).value
    return (c for c in iter_colorings(g, k, config) if c.palette_size == k)


def elementary_lower_bound(g: Graph) -> int:
    """1; 2 unless complete; and the maximum degree of C(G).

    Two cut-edges at a common vertex form the only path between their far ends, so the
    cut-edges at one vertex must get pairwise distinct colors.
    """
    require_connected(g)
    bound = 1 if is_complete(g) else 2
    if cut_edges(g):
        bound = max(bound, max_degree(cut_edge_subgraph(g).graph))
    return bound


def log_diameter_bound(t: Graph) -> int:
    d = diameter(t)
    return math.ceil(math.log2(d)) if d > 1 else 0


def cfc_lower_bound(g: Graph, config: LabConfig = DEFAULT_CONFIG) -> int:
    """Largest applicable lower bound, including the tree and h(G) bounds."""
    require_connected(g)
    if g.n < 2:
        raise GraphError("need at least two vertices")
    bound = 1 if is_complete(g) else 2
    if is_tree(g):
        return max(bound, max_degree(g), log_diameter_bound(g))
    if cut_edges(g):
        bound = max(bound, h_value(g, trust_cited_bounds=True, config=config))
    return bound


def cfc_exact(g: Graph, budget_cap: Optional[int] = None, *, trust_cited_bounds: bool = True,
              config: LabConfig = DEFAULT_CONFIG) -> CfcResult:
    """Exact cfc(g) with a verified optimal witness.

    With ``trust_cited_bounds`` false the search starts from elementary_lower_bound, so
    the result does not lean on the bounds it is used to check.
    """
    _check_size(g, config)
    started = time.perf_counter()
    lower = cfc_lower_bound(g, config) if trust_cited_bounds else elementary_lower_bound(g)
    stats = SearchStats()
    k = lower
    while True:
        if budget_cap is not None and k > budget_cap:
            stats.wall_time = time.perf_counter() - started
            raise BudgetExceeded(budget_cap)
        stats.budgets_tried.append(k)
        logger.debug("🔍 trying palette", budget=k, n=g.n, m=g.m)
        found = next(_ColoringSearch(g, k, stats).solutions(), None)
        if found is not None:
            break
        k += 1
    witness = EdgeColoring(g, found)
    if not is_conflict_free_connected(witness).passed:
        raise InvariantViolation("search returned a coloring that fails the checker", witness)
    stats.wall_time = time.perf_counter() - started
    if witness.palette_size < lower:
        logger.warning("⚠️ lower bound exceeds the palette found", lower_bound=lower,
                       palette=witness.palette_size)
    logger.info("✅ cfc computed", value=witness.palette_size, n=g.n, m=g.m,
                nodes=stats.nodes, prunes=stats.prunes)
    return CfcResult(witness.palette_size, witness, lower, stats)


def _cut_components(g: Graph) -> List[Graph]:
    require_connected(g)
    if not cut_edges(g):
        raise NoCutEdges()
    return [part.graph for part in components(cut_edge_subgraph(g).graph)]


def h_value(g: Graph, *, trust_cited_bounds: bool = True, config: LabConfig = DEFAULT_CONFIG) -> int:
    """Maximum cfc over the components of C(G)."""
    return max(
        cfc_exact(t, trust_cited_bounds=trust_cited_bounds, config=config).value
        for t in _cut_components(g)
    )


def satisfies_lemma5(g: Graph, *, trust_cited_bounds: bool = True,
                     config: LabConfig = DEFAULT_CONFIG) -> bool:
    """Exactly one component T of C(G) attains h(G), and T has an optimal coloring
    in which some color is used on a single edge."""
    trees = _cut_components(g)
    values = [cfc_exact(t, trust_cited_bounds=trust_cited_bounds, config=config).value for t in trees]
    h = max(values)
    if h < 2:
        raise HTooSmall(h)
    attaining = [t for t, value in zip(trees, values) if value == h]
    if len(attaining) != 1:
        return False
    for coloring in iter_colorings(attaining[0], h, config):
        if any(len(edges) == 1 for edges in coloring.color_classes().values()):
            return True
    return False


def lemma7_upper_bound(t: Graph) -> float:
    """(Δ−2)·log2(n) / (log2(Δ) − 1) for trees with Δ >= 3."""
    if not is_tree(t):
        raise NotATree()
    delta = max_degree(t)
    if delta < 3:
        raise GraphError("upper bound needs maximum degree at least 3")
    return (delta - 2) * math.log2(t.n) / (math.log2(delta) - 1)


def theorem2_hypothesis(delta: int, alpha: int) -> bool:
    """Δ >= (α + 2) / 2, in integers."""
    return 2 * delta >= alpha + 2
