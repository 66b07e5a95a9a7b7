"""
🔖 CANONICAL FORMS
Label-invariant byte encodings used to deduplicate enumerations and key memo tables.

Trees of any order use a rooted-at-center AHU string. Other graphs are canonicalized
by searching vertex orderings that respect an invariant color-refinement partition and
keeping the lexicographically largest upper-triangle adjacency code.
"""

from collections import deque
from typing import List, Optional, Sequence

from .config import DEFAULT_CONFIG
from .errors import TooLarge
from .graph import Graph, is_tree

TREE_TAG = b"T"
GRAPH_TAG = b"G"


def tree_centers(g: Graph) -> List[int]:
    """One or two center vertices of a tree, by repeated leaf stripping."""
    if g.n <= 2:
        return list(range(g.n))
    degree = g.degrees()
    layer = [v for v in range(g.n) if degree[v] <= 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in g.adjacency[leaf]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def rooted_tree_code(g: Graph, root: int) -> str:
    """AHU parenthesis string of the tree rooted at ``root``."""
    parent = [-1] * g.n
    order = []
    seen = [False] * g.n
    seen[root] = True
    queue = deque([root])
    while queue:
        a = queue.popleft()
        order.append(a)
        for b in g.adjacency[a]:
            if not seen[b]:
                seen[b] = True
                parent[b] = a
                queue.append(b)
    children: List[List[str]] = [[] for _ in range(g.n)]
    code = [""] * g.n
    for v in reversed(order):
        code[v] = "(" + "".join(sorted(children[v])) + ")"
        if parent[v] >= 0:
            children[parent[v]].append(code[v])
    return code[root]


def tree_canonical_form(g: Graph) -> bytes:
    return TREE_TAG + min(rooted_tree_code(g, c) for c in tree_centers(g)).encode("ascii")


def refined_cells(g: Graph) -> List[List[int]]:
    """Color refinement from degrees; cells come back in an invariant order."""
    colors = g.degrees()
    count = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in g.adjacency[v]))) for v in range(g.n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colors = [ranking[sig] for sig in signatures]
        if len(ranking) == count:
            break
        count = len(ranking)
    cells: List[List[int]] = [[] for _ in range(count)]
    for v in range(g.n):
        cells[colors[v]].append(v)
    return cells


def _uniform(g: Graph, placed: Sequence[int], cells: Sequence[Sequence[int]]) -> bool:
    """True when every completion of ``placed`` through ``cells`` yields the same code."""
    for i, cell in enumerate(cells):
        if not cell:
            continue
        ref = cell[0]
        for v in cell[1:]:
            if any(g.has_edge(v, p) != g.has_edge(ref, p) for p in placed):
                return False
        if len(cell) > 1:
            inner = {g.has_edge(a, b) for a in cell for b in cell if a < b}
            if len(inner) > 1:
                return False
        for other in cells[i + 1:]:
            if len({g.has_edge(a, b) for a in cell for b in other}) > 1:
                return False
    return True


def _best_code(g: Graph, cells: List[List[int]]) -> int:
    n = g.n
    total_bits = n * (n - 1) // 2
    cell_at = [c for c, cell in enumerate(cells) for _ in cell]
    order: List[int] = [0] * n
    best: Optional[int] = None

    def extend(code: int, position: int, v: int) -> int:
        for i in range(position):
            code = (code << 1) | (1 if g.has_edge(order[i], v) else 0)
        return code

    def search(position: int, code: int, used: int) -> None:
        nonlocal best
        if position == n:
            if best is None or code > best:
                best = code
            return
        remaining = [
            [v for v in cell if not (used >> v) & 1] for cell in cells[cell_at[position]:]
        ]
        if _uniform(g, order[:position], remaining):
            tail = [v for cell in remaining for v in cell]
            full = code
            for j, v in enumerate(tail):
                order[position + j] = v
                full = extend(full, position + j, v)
            search(n, full, -1)
            return
        bits_after = (position + 1) * position // 2
        for v in cells[cell_at[position]]:
            if (used >> v) & 1:
                continue
            candidate = extend(code, position, v)
            if best is not None and candidate < best >> (total_bits - bits_after):
                continue
            order[position] = v
            search(position + 1, candidate, used | (1 << v))

    search(0, 0, 0)
    assert best is not None
    return best


def canonical_form(g: Graph, limit: int = DEFAULT_CONFIG.canonical_limit) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic.

    Raises TooLarge for non-tree graphs with more than ``limit`` vertices.
    """
    if g.n == 0:
        return GRAPH_TAG + b"\x00"
    if is_tree(g):
        return tree_canonical_form(g)
    if g.n > limit:
        raise TooLarge("vertex count", g.n, limit)
    code = _best_code(g, refined_cells(g))
    width = max(1, (g.n * (g.n - 1) // 2 + 7) // 8)
    return GRAPH_TAG + bytes([g.n]) + code.to_bytes(width, "big")
