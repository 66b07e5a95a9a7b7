"""
🏗️ CONSTRUCTIVE COLORERS
Explicit colorings (star, ruler path, H_k, Q_k) and the two inductive procedures:
one colors any connected graph with at most α(G) colors, the other colors a tree with
2Δ >= α + 2 using exactly Δ colors. Every result is checked before it is returned.
"""

from typing import Dict, List, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, Field

from .alpha import independence_number
from .coloring import EdgeColoring, is_conflict_free_connected
from .config import DEFAULT_CONFIG
from .errors import GraphError, HypothesisViolated, InvariantViolation, KTooSmall, NotATree
from .families import h_graph, path, q_graph, q_leaf, star
from .graph import (
    Graph,
    Subgraph,
    components,
    cut_edges,
    delete_edge,
    is_complete,
    is_star,
    is_tree,
    max_degree,
    pendant_vertices,
    require_connected,
    tree_path_order,
)
from .solver import find_coloring, theorem2_hypothesis

logger = structlog.get_logger(__name__)

BASE_CASES = frozenset({
    "star",
    "path ruler",
    "two-edge-connected block",
    "pendant stars around a two-edge-connected core",
    "Subcase 2.1 embed H_k",
    "Subcase 2.2 embed Q_k",
})


class TraceNode(BaseModel):
    """One applied case of a recursive construction."""
    label: str
    vertices: List[int]
    edges: int
    palette: int
    fresh_colors: List[int] = Field(default_factory=list)
    delegated: Optional[str] = None
    children: List["TraceNode"] = Field(default_factory=list)

    def leaves(self) -> List["TraceNode"]:
        if not self.children:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]

    def fresh_total(self) -> int:
        return len(self.fresh_colors) + sum(child.fresh_total() for child in self.children)


TraceNode.model_rebuild()


class ConstructionTrace(BaseModel):
    method: str
    palette: int
    root: TraceNode

    def accounted_colors(self) -> int:
        """Fresh colors plus base-case palettes; never below the final palette."""
        return self.root.fresh_total() + sum(leaf.palette for leaf in self.root.leaves())


def _verified(coloring: EdgeColoring, what: str) -> EdgeColoring:
    cert = is_conflict_free_connected(coloring)
    if not cert.passed:
        raise InvariantViolation(
            f"{what} coloring is not conflict-free connected at pair {cert.failing_pair}",
            {"edges": list(coloring.graph.edges), "colors": list(coloring.colors)},
        )
    return coloring


def _require_k(k: int) -> None:
    if k < 3:
        raise KTooSmall(k)


def ruler_color(i: int) -> int:
    """1 + the 2-adic valuation of i (i >= 1)."""
    return (i & -i).bit_length()


def color_star(k: int) -> EdgeColoring:
    """Rainbow coloring of K_{1,k}."""
    if k < 1:
        raise KTooSmall(k, minimum=1)
    return _verified(EdgeColoring.rainbow(star(k + 1)), "star")


def color_path_ruler(m: int) -> EdgeColoring:
    if m < 1:
        raise KTooSmall(m, minimum=1)
    return _verified(EdgeColoring(path(m), tuple(ruler_color(i) for i in range(1, m + 1))), "ruler")


def h_table(k: int) -> Dict[Tuple[int, int], int]:
    table = {(0, i): i for i in range(1, k + 1)}
    table[(1, k + 1)] = k
    for i in range(2, k + 1):
        table[(i, k + i)] = i - 1
    return table


def q_table(k: int) -> Dict[Tuple[int, int], int]:
    table = h_table(k)
    for i in range(3, k + 1):
        table[(k + i, q_leaf(k, i))] = 1
    return table


def color_H(k: int) -> EdgeColoring:  # noqa: N802
    _require_k(k)
    return _verified(EdgeColoring.from_mapping(h_graph(k), h_table(k)), f"H_{k}")


def color_Q(k: int) -> EdgeColoring:  # noqa: N802
    _require_k(k)
    return _verified(EdgeColoring.from_mapping(q_graph(k), q_table(k)), f"Q_{k}")


# Recursive procedures work on plain color lists aligned with the graph's edges and
# carry ``names``: the original label of every current vertex, for trace output.

Names = Tuple[int, ...]
Built = Tuple[List[int], TraceNode]


def _node(label: str, g: Graph, names: Names, colors: Sequence[int], **extra) -> TraceNode:
    return TraceNode(label=label, vertices=list(names), edges=g.m,
                     palette=len(set(colors)), **extra)


def _sides(g: Graph, e: int, names: Names, anchor: int) -> Tuple[Subgraph, Subgraph, Subgraph, Names, Names]:
    """Split at edge e: (rest, side holding ``anchor``, other side) plus their names."""
    rest = delete_edge(g, e)
    first, second = components(rest.graph)
    near, far = (first, second) if anchor in first.vertex_map else (second, first)
    return (rest, near, far,
            tuple(names[v] for v in near.vertex_map), tuple(names[v] for v in far.vertex_map))


def _assemble(g: Graph, rest: Subgraph, e: int, fresh: int,
              parts: Sequence[Tuple[Subgraph, List[int]]]) -> List[int]:
    colors = [0] * g.m
    for part, part_colors in parts:
        for i, c in enumerate(part_colors):
            colors[rest.edge_map[part.edge_map[i]]] = c
    colors[e] = fresh
    return colors


def _base_search(g: Graph, budget: int,
                 fixed: Optional[Dict[int, int]] = None) -> Optional[EdgeColoring]:
    """Bounded-palette search on a base block; the exact solver's edge limit does not apply."""
    config = DEFAULT_CONFIG.with_overrides(edge_limit=max(g.m, DEFAULT_CONFIG.edge_limit))
    return find_coloring(g, budget, fixed=fixed, config=config)


def _pendant_pins(g: Graph) -> Tuple[Dict[int, int], int]:
    """Color the pendant edges at each vertex 1..r; returns pins and the largest r."""
    by_center: Dict[int, List[int]] = {}
    for v in pendant_vertices(g):
        center, e = g.incidence[v][0]
        by_center.setdefault(center, []).append(e)
    pins: Dict[int, int] = {}
    for edges in by_center.values():
        for color, e in enumerate(sorted(edges), start=1):
            pins[e] = color
    return pins, max((len(edges) for edges in by_center.values()), default=0)


def _theorem1(g: Graph, names: Names) -> Built:
    bridges = sorted(cut_edges(g))
    if not bridges:
        if is_complete(g):
            colors = [1] * g.m
            return colors, _node("two-edge-connected block", g, names, colors)
        found = _base_search(g, 2)
        if found is None:
            raise InvariantViolation("non-complete 2-edge-connected block has no 2-coloring",
                                     {"edges": list(g.edges)})
        colors = list(found.colors)
        return colors, _node("two-edge-connected block", g, names, colors,
                             delegated="exact search, budget 2")

    for e in bridges:
        x, y = g.edges[e]
        rest, near, far, near_names, far_names = _sides(g, e, names, x)
        if near.graph.n > 1 and far.graph.n > 1:
            logger.debug("🔪 splitting at cut-edge", edge=(names[x], names[y]))
            c1, t1 = _theorem1(near.graph, near_names)
            c2, t2 = _theorem1(far.graph, far_names)
            fresh = max(max(c1), max(c2)) + 1
            colors = _assemble(g, rest, e, fresh, [(near, c1), (far, c2)])
            return colors, _node(f"Case 1 split at edge {names[x]}-{names[y]}", g, names, colors,
                                 fresh_colors=[fresh], children=[t1, t2])

    if is_star(g):
        colors = list(range(1, g.m + 1))
        return colors, _node("star", g, names, colors)
    pins, t = _pendant_pins(g)
    found = _base_search(g, t + 1, fixed=pins)
    route = "pinned pendant stars"
    if found is None:
        found = _base_search(g, t + 1)
        route = "unpinned"
    if found is None:
        raise InvariantViolation(f"no coloring within {t + 1} colors around pendant stars",
                                 {"edges": list(g.edges)})
    colors = list(found.colors)
    return colors, _node("pendant stars around a two-edge-connected core", g, names, colors,
                         delegated=f"exact search, budget {t + 1}, {route}")


def color_via_theorem1(g: Graph) -> Tuple[EdgeColoring, ConstructionTrace]:
    """Conflict-free coloring with at most α(g) colors, following the cut-edge induction."""
    require_connected(g)
    if g.n < 2:
        raise GraphError("need at least two vertices")
    colors, root = _theorem1(g, tuple(range(g.n)))
    coloring = _verified(EdgeColoring(g, tuple(colors)), "theorem1")
    logger.info("🏗️ theorem1 coloring built", n=g.n, m=g.m, palette=coloring.palette_size)
    return coloring, ConstructionTrace(method="theorem1", palette=coloring.palette_size, root=root)


def _branch_sizes(t: Graph, u: int) -> Dict[int, int]:
    """Edge count of the branch hanging off each neighbor of u."""
    sizes: Dict[int, int] = {}
    for w in t.adjacency[u]:
        count = 0
        stack = [(w, u)]
        while stack:
            a, parent = stack.pop()
            for b in t.adjacency[a]:
                if b != parent:
                    count += 1
                    stack.append((b, a))
        sizes[w] = count
    return sizes


def _chain(t: Graph, u: int, w: int) -> List[int]:
    """Vertices of a path-shaped branch, starting at w and walking away from u."""
    chain, prev = [w], u
    while True:
        nxt = [x for x in t.adjacency[chain[-1]] if x != prev]
        if not nxt:
            return chain
        prev = chain[-1]
        chain.append(nxt[0])


def _embed(t: Graph, u: int, sizes: Dict[int, int], with_tails: bool) -> List[int]:
    """Place t inside H_k (or Q_k) and read off the host coloring."""
    k = t.degree(u)
    table = q_table(k) if with_tails else h_table(k)
    order = sorted(t.adjacency[u], key=lambda w: (-sizes[w], w))
    place = {u: 0}
    for rank, w in enumerate(order):
        leg = k - rank
        host = [leg, k + leg, q_leaf(k, leg)]
        for vertex, image in zip(_chain(t, u, w), host):
            place[vertex] = image
    colors = []
    for a, b in t.edges:
        pa, pb = place[a], place[b]
        colors.append(table[(min(pa, pb), max(pa, pb))])
    return colors


def _theorem2(t: Graph, names: Names) -> Built:
    k = max_degree(t)
    if k <= 2:
        order = tree_path_order(t)
        colors = [0] * t.m
        for i, (a, b) in enumerate(zip(order, order[1:]), start=1):
            colors[t.edge_index(a, b)] = ruler_color(i)
        return colors, _node("path ruler", t, names, colors)

    u = min(v for v in range(t.n) if t.degree(v) == k)
    stray = [v for v in range(t.n) if t.degree(v) == k and v != u and not t.has_edge(u, v)]
    if stray:
        raise InvariantViolation("a maximum-degree vertex is not adjacent to u",
                                 {"u": names[u], "others": [names[v] for v in stray]})
    u1 = min(t.adjacency[u], key=lambda w: (-t.degree(w), w))

    if t.degree(u1) == 1:
        colors = list(range(1, t.m + 1))
        return colors, _node("star", t, names, colors)

    if t.degree(u1) == 2:
        sizes = _branch_sizes(t, u)
        if all(size <= 1 for size in sizes.values()):
            colors = _embed(t, u, sizes, with_tails=False)
            return colors, _node("Subcase 2.1 embed H_k", t, names, colors)
        if all(size <= 2 for size in sizes.values()):
            long_legs = sum(1 for size in sizes.values() if size == 2)
            if long_legs > k - 2:
                raise InvariantViolation(f"{long_legs} two-edge branches, at most {k - 2} allowed",
                                         {"u": names[u]})
            colors = _embed(t, u, sizes, with_tails=True)
            return colors, _node("Subcase 2.2 embed Q_k", t, names, colors)
        w = min(v for v in t.adjacency[u] if sizes[v] >= 3)
        return _split_tree(t, names, u, w, k, "Subcase 2.3")

    return _split_tree(t, names, u, u1, k, "Case 3")


def _split_tree(t: Graph, names: Names, u: int, w: int, k: int, case: str) -> Built:
    e = t.edge_index(u, w)
    rest, near, far, near_names, far_names = _sides(t, e, names, u)
    logger.debug("🔪 splitting tree", case=case, edge=(names[u], names[w]))
    alpha_t = independence_number(t).value
    alpha_near = independence_number(near.graph).value
    alpha_far = independence_number(far.graph).value
    context = {"case": case, "edge": (names[u], names[w])}
    if max_degree(near.graph) != k - 1:
        raise InvariantViolation("near side does not have maximum degree k-1", context)
    if not theorem2_hypothesis(k - 1, alpha_near):
        raise InvariantViolation("near side breaks the degree hypothesis", context)
    if alpha_far > alpha_t - k + 1:
        raise InvariantViolation("far side independence number too large", context)
    c1, t1 = _theorem2(near.graph, near_names)
    c2, t2 = _theorem1(far.graph, far_names)
    if max(c1) > k - 1 or max(c2) > k - 1:
        raise InvariantViolation("a side used more than k-1 colors", context)
    colors = _assemble(t, rest, e, k, [(near, c1), (far, c2)])
    return colors, _node(f"{case} split at edge {names[u]}-{names[w]}", t, names, colors,
                         fresh_colors=[k], children=[t1, t2])


def color_tree_via_theorem2(t: Graph) -> Tuple[EdgeColoring, ConstructionTrace]:
    """Exactly Δ(t) colors for a tree with 2Δ >= α + 2."""
    if not is_tree(t):
        raise NotATree()
    if t.n < 2:
        raise GraphError("need at least two vertices")
    delta = max_degree(t)
    alpha = independence_number(t).value
    if not theorem2_hypothesis(delta, alpha):
        raise HypothesisViolated(delta, alpha)
    colors, root = _theorem2(t, tuple(range(t.n)))
    coloring = _verified(EdgeColoring(t, tuple(colors)), "theorem2")
    if coloring.palette_size != delta:
        raise InvariantViolation(f"palette {coloring.palette_size} differs from Δ={delta}",
                                 {"edges": list(t.edges), "colors": list(colors)})
    logger.info("🏗️ theorem2 coloring built", n=t.n, palette=delta)
    return coloring, ConstructionTrace(method="theorem2", palette=delta, root=root)
