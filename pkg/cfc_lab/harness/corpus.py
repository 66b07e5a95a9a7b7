"""
🗃️ CORPORA AND MEMO
Enumerated corpora (computed once per process) and the canonical-form keyed memo of
exact values shared by the checks.
"""

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Tuple

import structlog

from ..alpha import independence_number
from ..canonical import canonical_form
from ..config import LabConfig
from ..errors import MemoInconsistency, NoCutEdges, TooLarge
from ..families import enumerate_connected_graphs, enumerate_trees
from ..graph import Graph, components, cut_edge_subgraph, cut_edges
from ..solver import cfc_exact
from .report import CorpusBounds

logger = structlog.get_logger(__name__)


@dataclass
class Instance:
    graph: Graph
    params: Dict[str, int] = field(default_factory=dict)


@dataclass
class Outcome:
    ok: bool
    values: Dict[str, Any] = field(default_factory=dict)
    applicable: bool = True


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> Tuple[Graph, ...]:
    return tuple(enumerate_connected_graphs(n))


@lru_cache(maxsize=None)
def trees(n: int) -> Tuple[Graph, ...]:
    return tuple(enumerate_trees(n))


def connected_graphs_upto(max_n: int) -> List[Graph]:
    return [g for n in range(2, max_n + 1) for g in connected_graphs(n)]


def trees_upto(max_n: int, min_n: int = 2) -> List[Graph]:
    return [t for n in range(min_n, max_n + 1) for t in trees(n)]


def memo_key(g: Graph) -> bytes:
    try:
        return canonical_form(g)
    except TooLarge:
        return b"L" + repr((g.n, g.edges)).encode("ascii")


class CfcMemo:
    """Exact cfc and α values keyed by canonical form, with random re-verification."""

    def __init__(self, config: LabConfig, seed: int):
        self.config = config
        self.rng = random.Random(seed)
        self._cfc: Dict[bytes, int] = {}
        self._alpha: Dict[bytes, int] = {}
        self.hits = 0
        self.spot_checks = 0

    def cfc(self, g: Graph) -> int:
        key = memo_key(g)
        if key in self._cfc:
            self.hits += 1
            if self.rng.random() < self.config.memo_spot_check_rate:
                self.spot_checks += 1
                fresh = self._compute(g)
                if fresh != self._cfc[key]:
                    logger.error("❌ memo disagrees with recomputation", memo=self._cfc[key], fresh=fresh)
                    raise MemoInconsistency(
                        f"memoized cfc {self._cfc[key]} but recomputed {fresh} for {list(g.edges)}"
                    )
            return self._cfc[key]
        value = self._compute(g)
        self._cfc[key] = value
        return value

    def _compute(self, g: Graph) -> int:
        return cfc_exact(g, trust_cited_bounds=False, config=self.config).value

    def alpha(self, g: Graph) -> int:
        key = memo_key(g)
        if key not in self._alpha:
            self._alpha[key] = independence_number(g).value
        return self._alpha[key]

    def h(self, g: Graph) -> int:
        """Largest cfc over the components of C(G)."""
        if not cut_edges(g):
            raise NoCutEdges()
        return max(self.cfc(part.graph) for part in components(cut_edge_subgraph(g).graph))


@dataclass
class CheckContext:
    bounds: CorpusBounds
    config: LabConfig
    seed: int
    memo: CfcMemo

    @classmethod
    def create(cls, bounds: CorpusBounds, config: LabConfig, seed: int) -> "CheckContext":
        config = config.with_overrides(edge_limit=bounds.edge_limit)
        return cls(bounds, config, seed, CfcMemo(config, seed))
