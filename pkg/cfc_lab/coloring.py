"""
🎨 EDGE COLORINGS AND CONFLICT-FREE CHECKING
Edge colorings, conflict-free path tests and the all-pairs decision procedure.

A u-v path that uses color c exactly once runs through some edge e = xy of color c and
otherwise avoids color c, so the pair question reduces, per pivot edge, to finding two
vertex-disjoint paths {u, v} -> {x, y} in the graph with every c-colored edge removed.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import structlog
from pydantic import BaseModel, Field

from .config import DEFAULT_CONFIG
from .errors import (
    Disconnected,
    InvalidColoring,
    NotAPath,
    NotSimple,
    PathExplosion,
    SameVertex,
    VertexOutOfRange,
)
from .flow import bfs_path, vertex_disjoint_pair
from .graph import Graph, Subgraph, is_connected, is_forest

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class EdgeColoring:
    """Total map from the edges of ``graph`` (by edge index) to colors >= 1."""
    graph: Graph
    colors: Tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.graph.m:
            raise InvalidColoring(
                f"coloring has {len(self.colors)} entries for {self.graph.m} edges"
            )
        if any(c < 1 for c in self.colors):
            raise InvalidColoring("colors must be positive integers")

    @classmethod
    def from_mapping(cls, graph: Graph, mapping: Mapping[Tuple[int, int], int]) -> "EdgeColoring":
        colors = []
        for u, v in graph.edges:
            if (u, v) in mapping:
                colors.append(mapping[(u, v)])
            elif (v, u) in mapping:
                colors.append(mapping[(v, u)])
            else:
                raise InvalidColoring(f"edge {u}-{v} has no color")
        return cls(graph, tuple(colors))

    @classmethod
    def rainbow(cls, graph: Graph) -> "EdgeColoring":
        return cls(graph, tuple(range(1, graph.m + 1)))

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))

    def color_of(self, u: int, v: int) -> int:
        e = self.graph.edge_index(u, v)
        if e is None:
            raise NotAPath((u, v))
        return self.colors[e]

    def color_classes(self) -> Dict[int, List[int]]:
        classes: Dict[int, List[int]] = {}
        for e, c in enumerate(self.colors):
            classes.setdefault(c, []).append(e)
        return classes

    def normalized(self) -> "EdgeColoring":
        """Renumber colors 1..palette_size by first appearance in edge order."""
        renumber: Dict[int, int] = {}
        for c in self.colors:
            renumber.setdefault(c, len(renumber) + 1)
        return EdgeColoring(self.graph, tuple(renumber[c] for c in self.colors))

    def restrict(self, sub: Subgraph) -> "EdgeColoring":
        """Coloring induced on a subgraph built from this coloring's graph."""
        return EdgeColoring(sub.graph, tuple(self.colors[e] for e in sub.edge_map))


class Witness(NamedTuple):
    path: Tuple[int, ...]
    pivot_color: int


class PairWitness(BaseModel):
    u: int
    v: int
    path: List[int]
    pivot_color: int


class Certificate(BaseModel):
    """Per-pair conflict-free witnesses, or the first pair that has none."""
    status: str = Field(pattern="^(pass|fail)$")
    pairs: List[PairWitness] = Field(default_factory=list)
    failing_pair: Optional[Tuple[int, int]] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


# Low-level checks on raw color vectors. Color 0 marks an edge that is not there yet.

Usable = Callable[[int], bool]


def unique_color(colors: Sequence[int], edge_ids: Sequence[int]) -> Optional[int]:
    counts = Counter(colors[e] for e in edge_ids)
    if counts.get(0):
        return None
    for e in edge_ids:
        if counts[colors[e]] == 1:
            return colors[e]
    return None


def path_edge_ids(graph: Graph, path: Sequence[int]) -> List[int]:
    ids = []
    for a, b in zip(path, path[1:]):
        e = graph.edge_index(a, b)
        if e is None:
            raise NotAPath(tuple(path))
        ids.append(e)
    return ids


def path_through_edge(graph: Graph, usable: Usable, u: int, v: int, e: int) -> Optional[List[int]]:
    """A simple u-v path using edge ``e`` plus only ``usable`` edges, or None."""
    x, y = graph.edges[e]
    if {u, v} == {x, y}:
        return [u, v]

    def nbrs(w: int) -> List[int]:
        return [z for z, f in graph.incidence[w] if f != e and usable(f)]

    if u in (x, y):
        other = y if u == x else x
        tail = bfs_path(graph.n, nbrs, other, v, banned={u})
        return [u] + tail if tail is not None else None
    if v in (x, y):
        other = y if v == x else x
        head = bfs_path(graph.n, nbrs, u, other, banned={v})
        return head + [v] if head is not None else None
    pair = vertex_disjoint_pair(graph.n, nbrs, (u, v), (x, y))
    if pair is None:
        return None
    from_u, from_v = pair
    return from_u + list(reversed(from_v))


def pair_witness(graph: Graph, colors: Sequence[int], u: int, v: int) -> Optional[Witness]:
    """Conflict-free u-v path under ``colors`` (0 = uncolored, unusable)."""
    direct = graph.edge_index(u, v)
    if direct is not None and colors[direct]:
        return Witness((u, v), colors[direct])

    def colored(w: int) -> List[int]:
        return [z for z, f in graph.incidence[w] if colors[f]]

    shortest = bfs_path(graph.n, colored, u, v)
    if shortest is None:
        return None
    pivot = unique_color(colors, path_edge_ids(graph, shortest))
    if pivot is not None:
        return Witness(tuple(shortest), pivot)
    if is_forest(graph):
        # Only one u-v path exists.
        return None
    for e in range(graph.m):
        chi = colors[e]
        if not chi:
            continue
        path = path_through_edge(graph, lambda f: colors[f] != 0 and colors[f] != chi, u, v, e)
        if path is not None:
            return Witness(tuple(path), chi)
    return None


# Public API on EdgeColoring values.

def _check_pair(c: EdgeColoring, u: int, v: int) -> None:
    for w in (u, v):
        if w < 0 or w >= c.graph.n:
            raise VertexOutOfRange(w, c.graph.n)
    if u == v:
        raise SameVertex(u)


def is_conflict_free_path(c: EdgeColoring, path: Sequence[int]) -> bool:
    """True iff some color appears on exactly one edge of ``path``."""
    if len(set(path)) != len(path):
        raise NotSimple(tuple(path))
    ids = path_edge_ids(c.graph, path)
    if not ids:
        return False
    return unique_color(c.colors, ids) is not None


def exists_conflict_free_path(c: EdgeColoring, u: int, v: int) -> Optional[Witness]:
    _check_pair(c, u, v)
    return pair_witness(c.graph, c.colors, u, v)


def iter_simple_paths(graph: Graph, u: int, v: int) -> Iterator[List[int]]:
    """All simple u-v paths, depth first over sorted adjacency."""
    path = [u]
    on_path = {u}
    stack = [iter(graph.adjacency[u])]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if nxt in on_path:
            continue
        if nxt == v:
            yield path + [v]
            continue
        path.append(nxt)
        on_path.add(nxt)
        stack.append(iter(graph.adjacency[nxt]))


def exists_conflict_free_path_oracle(c: EdgeColoring, u: int, v: int,
                                     cap: int = DEFAULT_CONFIG.path_enum_cap) -> Optional[Witness]:
    """Reference answer by enumerating every simple u-v path."""
    _check_pair(c, u, v)
    for count, path in enumerate(iter_simple_paths(c.graph, u, v), start=1):
        if count > cap:
            raise PathExplosion(cap)
        pivot = unique_color(c.colors, path_edge_ids(c.graph, path))
        if pivot is not None:
            return Witness(tuple(path), pivot)
    return None


def is_conflict_free_connected(c: EdgeColoring) -> Certificate:
    """Certificate over all vertex pairs in lexicographic order."""
    if not is_connected(c.graph):
        raise Disconnected()
    pairs: List[PairWitness] = []
    n = c.graph.n
    for u in range(n):
        for v in range(u + 1, n):
            found = pair_witness(c.graph, c.colors, u, v)
            if found is None:
                logger.debug("🚫 pair without conflict-free path", u=u, v=v)
                return Certificate(status="fail", failing_pair=(u, v))
            pairs.append(PairWitness(u=u, v=v, path=list(found.path), pivot_color=found.pivot_color))
    return Certificate(status="pass", pairs=pairs)


def verify_certificate(c: EdgeColoring, cert: Certificate) -> bool:
    """Re-validate every witness of a passing certificate, and its pair coverage."""
    if not cert.passed:
        return False
    n = c.graph.n
    expected = {(u, v) for u in range(n) for v in range(u + 1, n)}
    covered = set()
    for item in cert.pairs:
        path = item.path
        if len(path) < 2 or {path[0], path[-1]} != {item.u, item.v}:
            return False
        try:
            if not is_conflict_free_path(c, path):
                return False
        except (NotAPath, NotSimple):
            return False
        ids = path_edge_ids(c.graph, path)
        if sum(1 for e in ids if c.colors[e] == item.pivot_color) != 1:
            return False
        covered.add((min(item.u, item.v), max(item.u, item.v)))
    return covered == expected
