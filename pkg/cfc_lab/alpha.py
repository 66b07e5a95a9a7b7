"""
🧮 INDEPENDENCE NUMBER
Exact maximum independent sets by bitmask branch and bound.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Tuple

from .errors import EmptyGraph, TooLarge
from .graph import Graph

EXHAUSTIVE_LIMIT = 20


@dataclass(frozen=True)
class AlphaResult:
    """Independence number with one maximum independent set."""
    value: int
    witness: FrozenSet[int]


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> Iterable[int]:
    """Set bit positions of x, lowest first."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    """No edge of g has both endpoints in ``vertices``."""
    chosen = set(vertices)
    return not any(u in chosen and v in chosen for u, v in g.edges)


class _MaxIndependentSet:
    """Branch and bound over vertex bitmasks; ``nbr[v]`` is the neighborhood mask of v."""

    def __init__(self, g: Graph):
        self.nbr = [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]
        self.best_size = 0
        self.best_mask = 0

    def _degree(self, v: int, rem: int) -> int:
        return _popcount(self.nbr[v] & rem)

    def greedy(self, rem: int) -> int:
        """Minimum-degree greedy independent set inside ``rem``."""
        chosen = 0
        while rem:
            v = min(_bits(rem), key=lambda w: (self._degree(w, rem), w))
            chosen |= 1 << v
            rem &= ~((1 << v) | self.nbr[v])
        return chosen

    def matching_size(self, rem: int) -> int:
        """Size of a greedy maximal matching inside ``rem``."""
        size = 0
        free = rem
        for v in _bits(rem):
            if not (free >> v) & 1:
                continue
            partners = self.nbr[v] & free & ~(1 << v)
            if partners:
                w = (partners & -partners).bit_length() - 1
                free &= ~((1 << v) | (1 << w))
                size += 1
        return size

    def reduce(self, rem: int, chosen: int) -> Tuple[int, int]:
        """Take every vertex of degree <= 1 in the remaining graph."""
        changed = True
        while changed:
            changed = False
            for v in _bits(rem):
                if self._degree(v, rem) <= 1:
                    chosen |= 1 << v
                    rem &= ~((1 << v) | self.nbr[v])
                    changed = True
                    break
        return rem, chosen

    def search(self, rem: int, chosen: int) -> None:
        """Branch on a maximum-degree vertex: leave it out, then take it."""
        rem, chosen = self.reduce(rem, chosen)
        size = _popcount(chosen)
        if rem == 0:
            if size > self.best_size:
                self.best_size, self.best_mask = size, chosen
            return
        # Each matching edge contributes at most one vertex.
        if size + _popcount(rem) - self.matching_size(rem) <= self.best_size:
            return
        v = min(_bits(rem), key=lambda w: (-self._degree(w, rem), w))
        self.search(rem & ~(1 << v), chosen)
        self.search(rem & ~((1 << v) | self.nbr[v]), chosen | (1 << v))

    def solve(self, n: int) -> AlphaResult:
        """Seed the incumbent greedily, then search the whole vertex set."""
        full = (1 << n) - 1
        start = self.greedy(full)
        self.best_size, self.best_mask = _popcount(start), start
        self.search(full, 0)
        return AlphaResult(self.best_size, frozenset(_bits(self.best_mask)))


def independence_number(g: Graph) -> AlphaResult:
    """Exact α(g) with a maximum independent set as witness."""
    if g.n == 0:
        raise EmptyGraph()
    return _MaxIndependentSet(g).solve(g.n)


def independence_number_exhaustive(g: Graph) -> AlphaResult:
    """Subset enumeration, largest size first. Reference only."""
    if g.n == 0:
        raise EmptyGraph()
    if g.n > EXHAUSTIVE_LIMIT:
        raise TooLarge("vertex count", g.n, EXHAUSTIVE_LIMIT)
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            if is_independent(g, subset):
                return AlphaResult(size, frozenset(subset))
    raise AssertionError("a single vertex is always independent")
