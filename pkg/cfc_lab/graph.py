"""
🕸️ GRAPH CORE
Immutable simple undirected graphs on vertices 0..n-1 and the structural queries the
rest of the lab is built on: connectivity, components, cut-edges, C(G), degrees,
diameter and the tree / complete / 2-edge-connected predicates.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, NewType, Optional, Sequence, Set, Tuple

from .errors import Disconnected, DuplicateEdge, EmptyGraph, LoopEdge, VertexOutOfRange

EdgeRef = NewType("EdgeRef", int)
Edge = Tuple[int, int]


class Graph:
    """Simple undirected graph.

    The edge list is sorted by (min endpoint, max endpoint); ``EdgeRef`` values are
    positions into it. ``incidence[v]`` lists ``(neighbor, edge index)`` pairs sorted by
    neighbor.
    """

    __slots__ = ("n", "edges", "adjacency", "incidence", "_index")

    def __init__(self, n: int, edges: Iterable[Edge]):
        normalized = sorted((min(u, v), max(u, v)) for u, v in edges)
        incidence: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        index: Dict[Edge, int] = {}
        for i, (u, v) in enumerate(normalized):
            index[(u, v)] = i
            incidence[u].append((v, i))
            incidence[v].append((u, i))
        self.n = n
        self.edges: Tuple[Edge, ...] = tuple(normalized)
        self.incidence: Tuple[Tuple[Tuple[int, int], ...], ...] = tuple(
            tuple(sorted(row)) for row in incidence
        )
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(w for w, _ in row) for row in self.incidence
        )
        self._index = index

    @classmethod
    def from_edge_list(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Validating constructor; see the module-level ``from_edge_list``."""
        return from_edge_list(n, pairs)

    @property
    def m(self) -> int:
        """Edge count."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Number of neighbors of v."""
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        """Degree sequence in vertex order."""
        return [len(row) for row in self.adjacency]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        """Adjacency test, endpoint order ignored."""
        return (min(u, v), max(u, v)) in self._index

    def edge_index(self, u: int, v: int) -> Optional[int]:
        """Position of uv in ``edges``, or None when absent."""
        return self._index.get((min(u, v), max(u, v)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def __getstate__(self):
        return (self.n, self.edges)

    def __setstate__(self, state):
        n, edges = state
        Graph.__init__(self, n, edges)


@dataclass(frozen=True)
class Subgraph:
    """A graph cut out of a parent, with maps back to the parent's labels."""
    graph: Graph
    vertex_map: Tuple[int, ...]
    edge_map: Tuple[int, ...]


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Validate and normalize an edge list into a Graph."""
    if n < 0:
        raise VertexOutOfRange(n, 0)
    seen: Set[Edge] = set()
    normalized: List[Edge] = []
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        for w in (u, v):
            if w < 0 or w >= n:
                raise VertexOutOfRange(w, n)
        if u == v:
            raise LoopEdge(u)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(*key)
        seen.add(key)
        normalized.append(key)
    return Graph(n, normalized)


def _component_labels(g: Graph, skip_edge: int = -1, skip_vertex: int = -1) -> Tuple[List[int], int]:
    """BFS component label per vertex and the count, optionally ignoring one edge or vertex."""
    label = [-1] * g.n
    count = 0
    for root in range(g.n):
        if label[root] != -1 or root == skip_vertex:
            continue
        label[root] = count
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b, e in g.incidence[a]:
                if e == skip_edge or b == skip_vertex or label[b] != -1:
                    continue
                label[b] = count
                queue.append(b)
        count += 1
    return label, count


def count_components(g: Graph) -> int:
    """Number of connected components, isolated vertices included."""
    return _component_labels(g)[1]


def is_connected(g: Graph) -> bool:
    """Connectivity test; the empty graph raises EmptyGraph."""
    if g.n == 0:
        raise EmptyGraph()
    return count_components(g) == 1


def require_connected(g: Graph) -> None:
    """Raise Disconnected unless g is connected."""
    if not is_connected(g):
        raise Disconnected()


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Subgraph:
    """Subgraph induced on ``vertices``; new labels follow ascending original labels."""
    keep = sorted(set(vertices))
    new_label = {v: i for i, v in enumerate(keep)}
    edges: List[Edge] = []
    originals: List[int] = []
    for e, (u, v) in enumerate(g.edges):
        if u in new_label and v in new_label:
            edges.append((new_label[u], new_label[v]))
            originals.append(e)
    return Subgraph(Graph(len(keep), edges), tuple(keep), tuple(originals))


def edge_subgraph(g: Graph, edge_indices: Iterable[int]) -> Subgraph:
    """Subgraph formed by the given edges and their endpoints."""
    chosen = sorted(set(edge_indices))
    keep = sorted({w for e in chosen for w in g.edges[e]})
    new_label = {v: i for i, v in enumerate(keep)}
    edges = [(new_label[g.edges[e][0]], new_label[g.edges[e][1]]) for e in chosen]
    sub = Graph(len(keep), edges)
    # Relabeling is monotone, so sorted order of the new edges matches ``chosen``.
    return Subgraph(sub, tuple(keep), tuple(chosen))


def delete_edge(g: Graph, e: int) -> Subgraph:
    """g - e on the same vertex set."""
    keep = [i for i in range(g.m) if i != e]
    sub = Graph(g.n, [g.edges[i] for i in keep])
    return Subgraph(sub, tuple(range(g.n)), tuple(keep))


def remove_vertices(g: Graph, vertices: Iterable[int]) -> Subgraph:
    """g minus the given vertices and their edges."""
    gone = set(vertices)
    return induced_subgraph(g, (v for v in range(g.n) if v not in gone))


def add_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """New graph with one extra vertex (label n) joined to ``neighbors``."""
    return Graph(g.n + 1, list(g.edges) + [(w, g.n) for w in neighbors])


def components(g: Graph) -> List[Subgraph]:
    """Connected components, ordered by their smallest original vertex."""
    label, count = _component_labels(g)
    groups: List[List[int]] = [[] for _ in range(count)]
    for v, c in enumerate(label):
        groups[c].append(v)
    return [induced_subgraph(g, group) for group in groups]


def cut_edges(g: Graph) -> FrozenSet[EdgeRef]:
    """Bridges of g by the lowpoint DFS (iterative)."""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: List[int] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.incidence[root]))]
        while stack:
            v, parent_edge, it = stack[-1]
            descended = False
            for w, e in it:
                if e == parent_edge:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(g.incidence[w])))
                    descended = True
                    break
                low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    bridges.append(parent_edge)
    return frozenset(EdgeRef(e) for e in bridges)


def bridges_oracle(g: Graph) -> FrozenSet[EdgeRef]:
    """Definitional bridges: deleting e raises the component count."""
    base = count_components(g)
    return frozenset(
        EdgeRef(e) for e in range(g.m) if _component_labels(g, skip_edge=e)[1] == base + 1
    )


def cut_edge_subgraph(g: Graph) -> Subgraph:
    """C(G): the subgraph formed by the cut-edges of g."""
    return edge_subgraph(g, cut_edges(g))


def cut_vertices(g: Graph) -> FrozenSet[int]:
    """Vertices whose removal splits their component."""
    base = count_components(g)
    # Removing a vertex drops it from the count; an isolated vertex removed lowers it.
    return frozenset(
        v for v in range(g.n)
        if g.degree(v) > 0 and _component_labels(g, skip_vertex=v)[1] > base
    )


def max_degree(g: Graph) -> int:
    """Delta(g); 0 for an edgeless graph."""
    return max(g.degrees(), default=0)


def bfs_distances(g: Graph, source: int) -> List[int]:
    """Hop distances from source; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for b in g.adjacency[a]:
            if dist[b] == -1:
                dist[b] = dist[a] + 1
                queue.append(b)
    return dist


def diameter(g: Graph) -> int:
    """Largest eccentricity of a connected graph."""
    if g.n == 0:
        raise EmptyGraph()
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if -1 in dist:
            raise Disconnected("diameter needs a connected graph")
        best = max(best, max(dist))
    return best


def is_tree(g: Graph) -> bool:
    """Connected with n - 1 edges."""
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


@lru_cache(maxsize=4096)
def is_forest(g: Graph) -> bool:
    """Acyclic: every component is a tree."""
    return g.m == g.n - count_components(g)


def is_complete(g: Graph) -> bool:
    """Every pair of vertices is adjacent."""
    return g.m == g.n * (g.n - 1) // 2


def is_star(g: Graph) -> bool:
    """True iff g is K_{1,n-1} with n >= 2."""
    return g.n >= 2 and g.m == g.n - 1 and max_degree(g) == g.n - 1


def is_two_edge_connected(g: Graph) -> bool:
    """Connected on at least two vertices with no cut-edge."""
    return g.n >= 2 and is_connected(g) and not cut_edges(g)


def is_two_connected(g: Graph) -> bool:
    """Connected on at least three vertices with no cut-vertex."""
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def pendant_vertices(g: Graph) -> List[int]:
    """Degree-one vertices in ascending order."""
    return [v for v in range(g.n) if g.degree(v) == 1]


def path_between(g: Graph, u: int, v: int) -> Optional[List[int]]:
    """A shortest u-v path by BFS over sorted adjacency."""
    parent: Dict[int, int] = {u: u}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            break
        for b in g.adjacency[a]:
            if b not in parent:
                parent[b] = a
                queue.append(b)
    if v not in parent:
        return None
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def tree_path_order(g: Graph) -> List[int]:
    """Vertices of a path graph in order, starting from its lowest-labeled end."""
    if g.n == 1:
        return [0]
    ends = [v for v in range(g.n) if g.degree(v) <= 1]
    start = min(ends)
    order = [start]
    prev = -1
    while len(order) < g.n:
        nxt = [w for w in g.adjacency[order[-1]] if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order
