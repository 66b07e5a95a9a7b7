"""
🌊 DISJOINT PATHS
Unit vertex-capacity max-flow (BFS augmentation on a split-vertex network) for the
"two vertex-disjoint paths from {s1, s2} into {t1, t2}" question the checker reduces to.
"""

from collections import deque
from typing import Callable, Dict, Iterable, List, Optional, Set, Tuple

Neighbors = Callable[[int], Iterable[int]]


def bfs_path(n: int, neighbors: Neighbors, start: int, goal: int,
             banned: Optional[Set[int]] = None) -> Optional[List[int]]:
    """Shortest start-goal path avoiding ``banned`` vertices, or None."""
    banned = banned or set()
    if start in banned or goal in banned:
        return None
    parent: Dict[int, int] = {start: start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        if a == goal:
            break
        for b in neighbors(a):
            if b not in parent and b not in banned:
                parent[b] = a
                queue.append(b)
    if goal not in parent:
        return None
    path = [goal]
    while path[-1] != start:
        path.append(parent[path[-1]])
    path.reverse()
    return path


class _SplitNetwork:
    """Residual network where vertex w becomes in-node 2w and out-node 2w+1."""

    def __init__(self, n: int, neighbors: Neighbors):
        self.source = 2 * n
        self.sink = 2 * n + 1
        self.residual: Dict[Tuple[int, int], int] = {}
        self.forward: Set[Tuple[int, int]] = set()
        self.arcs: Dict[int, List[int]] = {node: [] for node in range(2 * n + 2)}
        for w in range(n):
            self._arc(2 * w, 2 * w + 1)
            for z in neighbors(w):
                self._arc(2 * w + 1, 2 * z)

    def _arc(self, a: int, b: int) -> None:
        if (a, b) not in self.residual:
            self.arcs[a].append(b)
        if (b, a) not in self.residual:
            self.arcs[b].append(a)
            self.residual[(b, a)] = 0
        self.residual[(a, b)] = 1
        self.forward.add((a, b))

    def augment(self) -> bool:
        parent = {self.source: self.source}
        queue = deque([self.source])
        while queue and self.sink not in parent:
            a = queue.popleft()
            for b in self.arcs[a]:
                if b not in parent and self.residual[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if self.sink not in parent:
            return False
        b = self.sink
        while b != self.source:
            a = parent[b]
            self.residual[(a, b)] -= 1
            self.residual[(b, a)] += 1
            b = a
        return True

    def carries_flow(self, a: int, b: int) -> bool:
        # Forward arcs have capacity 1 and their reverse starts at 0.
        return (a, b) in self.forward and self.residual[(b, a)] > 0

    def walk(self, start: int) -> List[int]:
        """Follow flow from ``start``'s in-node until the sink; returns graph vertices."""
        path = [start]
        node = 2 * start + 1
        while True:
            nxt = next(b for b in self.arcs[node] if self.carries_flow(node, b))
            if nxt == self.sink:
                return path
            path.append(nxt // 2)
            node = nxt + 1


def vertex_disjoint_pair(n: int, neighbors: Neighbors, sources: Tuple[int, int],
                         targets: Tuple[int, int]) -> Optional[Tuple[List[int], List[int]]]:
    """Two vertex-disjoint paths, one from each source, ending on distinct targets.

    All four vertices must be distinct. Returns the path from ``sources[0]`` first.
    """
    net = _SplitNetwork(n, neighbors)
    for s in sources:
        net._arc(net.source, 2 * s)
    for t in targets:
        net._arc(2 * t + 1, net.sink)
    if not (net.augment() and net.augment()):
        return None
    return net.walk(sources[0]), net.walk(sources[1])
