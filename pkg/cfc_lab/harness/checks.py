"""
✅ CHECK REGISTRY
One entry per verified statement: the statement text, the corpus it runs over and the
predicate evaluated on every instance.
"""

import math
import random
from dataclasses import dataclass
from typing import Callable, Dict, List

import structlog

from ..alpha import independence_number
from ..coloring import EdgeColoring
from ..construct import (
    color_H,
    color_path_ruler,
    color_Q,
    color_tree_via_theorem2,
    color_via_theorem1,
)
from ..families import (
    g_lk,
    h_graph,
    path,
    q_graph,
    random_subtree,
    remark1_tree,
    remark2_tree,
    star,
    try_random_qualifying_tree,
)
from ..graph import (
    Graph,
    cut_edges,
    diameter,
    is_complete,
    is_star,
    is_two_connected,
    is_two_edge_connected,
    max_degree,
)
from ..solver import lemma7_upper_bound, satisfies_lemma5, theorem2_hypothesis
from .corpus import CheckContext, Instance, Outcome, connected_graphs_upto, trees_upto
from .report import CheckId, CorpusBounds

logger = structlog.get_logger(__name__)

Corpus = Callable[[CorpusBounds, int], List[Instance]]
Predicate = Callable[[Instance, CheckContext], Outcome]


@dataclass(frozen=True)
class CheckDefinition:
    statement: str
    corpus: Corpus
    predicate: Predicate


def _sample_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


# Corpora

def _graphs(bounds: CorpusBounds, seed: int) -> List[Instance]:
    return [Instance(g) for g in connected_graphs_upto(bounds.max_n_graphs)]


def _graphs_where(test: Callable[[Graph], bool]) -> Corpus:
    def corpus(bounds: CorpusBounds, seed: int) -> List[Instance]:
        return [Instance(g) for g in connected_graphs_upto(bounds.max_n_graphs) if test(g)]
    return corpus


def _trees(bounds: CorpusBounds, seed: int) -> List[Instance]:
    return [Instance(t) for t in trees_upto(bounds.max_n_trees)]


def _qualifies(t: Graph) -> bool:
    return theorem2_hypothesis(max_degree(t), independence_number(t).value)


def _theorem2_corpus(bounds: CorpusBounds, seed: int) -> List[Instance]:
    exhaustive = [Instance(t) for t in trees_upto(bounds.max_n_trees, min_n=3) if _qualifies(t)]
    sampled = []
    for i in range(bounds.random_trees):
        sample_seed = _sample_seed(seed, i)
        n = random.Random(sample_seed).randint(3, bounds.random_tree_max_n)
        t = try_random_qualifying_tree(n, sample_seed)
        if t is None:
            logger.warning("🎲 qualifying tree sample fell back to a star", n=n, sample_seed=sample_seed)
        params = {"sample_seed": sample_seed, "fallback": int(t is None)}
        sampled.append(Instance(t if t is not None else star(n), params))
    return exhaustive + sampled


def _trees_with_big_degree(bounds: CorpusBounds, seed: int) -> List[Instance]:
    return [Instance(t) for t in trees_upto(bounds.max_n_trees) if max_degree(t) >= 3]


def _lemma9_corpus(bounds: CorpusBounds, seed: int) -> List[Instance]:
    instances = []
    for index, t in enumerate(trees_upto(bounds.lemma9_max_n, min_n=3)):
        for j in range(bounds.lemma9_samples):
            sample_seed = _sample_seed(seed, index * bounds.lemma9_samples + j)
            instances.append(Instance(t, {"sample_seed": sample_seed}))
    return instances


def _paths(bounds: CorpusBounds, seed: int) -> List[Instance]:
    return [Instance(path(m), {"m": m}) for m in range(1, bounds.path_max_edges + 1)]


def _spiders(builder: Callable[[int], Graph]) -> Corpus:
    def corpus(bounds: CorpusBounds, seed: int) -> List[Instance]:
        top = max(bounds.hq_verify_max_k, bounds.hq_exact_max_k)
        return [Instance(builder(k), {"k": k}) for k in range(3, top + 1)]
    return corpus


def _example1_corpus(bounds: CorpusBounds, seed: int) -> List[Instance]:
    n = bounds.example1_n
    return [
        Instance(g_lk(n, l, k), {"n": n, "l": l, "k": k})
        for l in range(3, n - 1)  # noqa: E741
        for k in range(2, l + 1)
    ]


def _remark_corpus(builder: Callable[[int], Graph], attribute: str) -> Corpus:
    def corpus(bounds: CorpusBounds, seed: int) -> List[Instance]:
        return [Instance(builder(k), {"k": k}) for k in getattr(bounds, attribute)]
    return corpus


# Predicates

def _observation1(inst: Instance, ctx: CheckContext) -> Outcome:
    g = inst.graph
    a = ctx.memo.alpha(g)
    ok = 1 <= a <= g.n - 1 and (a == 1) == is_complete(g) and (a == g.n - 1) == is_star(g)
    return Outcome(ok, {"alpha": a, "n": g.n})


def _theorem1(inst: Instance, ctx: CheckContext) -> Outcome:
    g = inst.graph
    cfc = ctx.memo.cfc(g)
    a = ctx.memo.alpha(g)
    coloring, _ = color_via_theorem1(g)
    palette = coloring.palette_size
    ok = (
        1 <= cfc <= a <= g.n - 1
        and (cfc == 1) == (a == 1)
        and (cfc == g.n - 1) == (a == g.n - 1)
        and palette <= a
    )
    return Outcome(ok, {"cfc": cfc, "alpha": a, "n": g.n, "constructed_palette": palette})


def _max_degree_vertices_adjacent(t: Graph) -> bool:
    delta = max_degree(t)
    tops = [v for v in range(t.n) if t.degree(v) == delta]
    return all(t.has_edge(a, b) for i, a in enumerate(tops) for b in tops[i + 1:])


def _theorem2(inst: Instance, ctx: CheckContext) -> Outcome:
    t = inst.graph
    delta = max_degree(t)
    coloring, _ = color_tree_via_theorem2(t)
    values = {"delta": delta, "n": t.n, "constructed_palette": coloring.palette_size}
    ok = coloring.palette_size == delta and _max_degree_vertices_adjacent(t)
    if t.m <= ctx.config.edge_limit:
        values["cfc"] = ctx.memo.cfc(t)
        ok = ok and values["cfc"] == delta
    return Outcome(ok, values)


def _corollary1(inst: Instance, ctx: CheckContext) -> Outcome:
    g = inst.graph
    if ctx.memo.alpha(g) != 2:
        return Outcome(True, {"alpha": ctx.memo.alpha(g)}, applicable=False)
    cfc = ctx.memo.cfc(g)
    return Outcome(cfc == 2, {"cfc": cfc, "alpha": 2})


def _corollary2(inst: Instance, ctx: CheckContext) -> Outcome:
    t = inst.graph
    delta, a, cfc = max_degree(t), ctx.memo.alpha(t), ctx.memo.cfc(t)
    ok = delta <= cfc <= a and (delta != a or cfc == delta)
    return Outcome(ok, {"delta": delta, "alpha": a, "cfc": cfc})


def _equals_two(inst: Instance, ctx: CheckContext) -> Outcome:
    cfc = ctx.memo.cfc(inst.graph)
    return Outcome(cfc == 2, {"cfc": cfc})


def _lemma3(inst: Instance, ctx: CheckContext) -> Outcome:
    g = inst.graph
    cfc = ctx.memo.cfc(g)
    ok = 1 <= cfc <= g.n - 1 and (cfc == 1) == is_complete(g) and (cfc == g.n - 1) == is_star(g)
    return Outcome(ok, {"cfc": cfc, "n": g.n})


def _lemma4(inst: Instance, ctx: CheckContext) -> Outcome:
    g = inst.graph
    h, cfc = ctx.memo.h(g), ctx.memo.cfc(g)
    return Outcome(h <= cfc <= h + 1, {"h": h, "cfc": cfc})


def _lemma5(inst: Instance, ctx: CheckContext) -> Outcome:
    g = inst.graph
    h = ctx.memo.h(g)
    if h < 2:
        return Outcome(True, {"h": h}, applicable=False)
    holds = satisfies_lemma5(g, trust_cited_bounds=False, config=ctx.config)
    cfc = ctx.memo.cfc(g)
    return Outcome(not holds or cfc == h, {"h": h, "cfc": cfc, "condition": holds})


def _lemma6(inst: Instance, ctx: CheckContext) -> Outcome:
    m = inst.graph.m
    expected = math.ceil(math.log2(m + 1))
    cfc = ctx.memo.cfc(inst.graph)
    ruler = color_path_ruler(m).palette_size
    return Outcome(cfc == expected and ruler == expected,
                   {"m": m, "cfc": cfc, "expected": expected, "ruler_palette": ruler})


def _lemma7(inst: Instance, ctx: CheckContext) -> Outcome:
    t = inst.graph
    delta, d, cfc = max_degree(t), diameter(t), ctx.memo.cfc(t)
    upper = lemma7_upper_bound(t)
    ok = delta <= cfc and math.log2(d) <= cfc and cfc <= upper + 1e-9
    return Outcome(ok, {"delta": delta, "diameter": d, "cfc": cfc, "upper": round(upper, 6)})


def _lemma8(inst: Instance, ctx: CheckContext) -> Outcome:
    t = inst.graph
    if t.n < 4:
        return Outcome(True, {"n": t.n}, applicable=False)
    delta, cfc = max_degree(t), ctx.memo.cfc(t)
    broken = [s for s in range(1, (t.n - 2) // 2 + 1) if (cfc == t.n - s) != (delta == t.n - s)]
    return Outcome(not broken, {"n": t.n, "delta": delta, "cfc": cfc, "broken_t": broken})


def _lemma9(inst: Instance, ctx: CheckContext) -> Outcome:
    t2 = inst.graph
    t1 = random_subtree(t2, random.Random(inst.params["sample_seed"]))
    if t1.n < 2:
        return Outcome(True, {"subtree_n": t1.n}, applicable=False)
    small, large = ctx.memo.cfc(t1), ctx.memo.cfc(t2)
    return Outcome(small <= large, {"subtree_edges": [list(e) for e in t1.edges],
                                    "cfc_subtree": small, "cfc_tree": large})


def _spider_rule(k: int, u: int, v: int) -> int:
    """Expected color of edge uv in H_k or Q_k, read from the vertex roles."""
    if u == 0:
        return v
    if v == k + u:
        return k if u == 1 else u - 1
    return 1


def _spider_check(colorer: Callable[[int], EdgeColoring]) -> Predicate:
    def predicate(inst: Instance, ctx: CheckContext) -> Outcome:
        k = inst.params["k"]
        coloring = colorer(k)
        matches = coloring.graph == inst.graph and all(
            c == _spider_rule(k, u, v) for (u, v), c in zip(coloring.graph.edges, coloring.colors)
        )
        values = {"k": k, "palette": coloring.palette_size, "table_matches": matches}
        ok = matches and coloring.palette_size == k
        if k <= ctx.bounds.hq_exact_max_k:
            values["cfc"] = ctx.memo.cfc(inst.graph)
            ok = ok and values["cfc"] == k
        return Outcome(ok, values)
    return predicate


def _example1(inst: Instance, ctx: CheckContext) -> Outcome:
    g = inst.graph
    a, cfc = ctx.memo.alpha(g), ctx.memo.cfc(g)
    return Outcome(a == inst.params["l"] and cfc == inst.params["k"], {"alpha": a, "cfc": cfc})


def _remark1(inst: Instance, ctx: CheckContext) -> Outcome:
    t, k = inst.graph, inst.params["k"]
    delta, a, cfc = max_degree(t), ctx.memo.alpha(t), ctx.memo.cfc(t)
    ok = (cfc == k and delta == k - 1 and 2 * delta == a + 1
          and not theorem2_hypothesis(delta, a) and cfc > delta)
    return Outcome(ok, {"k": k, "delta": delta, "alpha": a, "cfc": cfc})


def _remark2(inst: Instance, ctx: CheckContext) -> Outcome:
    t, k = inst.graph, inst.params["k"]
    delta, a, cfc = max_degree(t), ctx.memo.alpha(t), ctx.memo.cfc(t)
    ok = cfc == delta == k and not theorem2_hypothesis(delta, a)
    return Outcome(ok, {"k": k, "delta": delta, "alpha": a, "cfc": cfc})


CHECKS: Dict[CheckId, CheckDefinition] = {
    CheckId.OBSERVATION1: CheckDefinition(
        "1 <= alpha <= n-1; alpha = 1 iff complete; alpha = n-1 iff star", _graphs, _observation1),
    CheckId.THEOREM1: CheckDefinition(
        "1 <= cfc <= alpha <= n-1 with both extreme characterizations; "
        "the cut-edge induction colors within alpha", _graphs, _theorem1),
    CheckId.THEOREM2: CheckDefinition(
        "trees with 2*Delta >= alpha + 2 have cfc = Delta, realized by the constructive procedure",
        _theorem2_corpus, _theorem2),
    CheckId.COROLLARY1: CheckDefinition("alpha = 2 implies cfc = 2", _graphs, _corollary1),
    CheckId.COROLLARY2: CheckDefinition(
        "trees: Delta <= cfc <= alpha, and Delta = alpha implies cfc = Delta", _trees, _corollary2),
    CheckId.LEMMA1: CheckDefinition(
        "2-connected non-complete graphs have cfc = 2",
        _graphs_where(lambda g: is_two_connected(g) and not is_complete(g)), _equals_two),
    CheckId.LEMMA2: CheckDefinition(
        "2-edge-connected non-complete graphs have cfc = 2",
        _graphs_where(lambda g: is_two_edge_connected(g) and not is_complete(g)), _equals_two),
    CheckId.LEMMA3: CheckDefinition(
        "1 <= cfc <= n-1; cfc = 1 iff complete; cfc = n-1 iff star", _graphs, _lemma3),
    CheckId.LEMMA4: CheckDefinition(
        "h <= cfc <= h + 1 for graphs with cut-edges", _graphs_where(lambda g: bool(cut_edges(g))),
        _lemma4),
    CheckId.LEMMA5: CheckDefinition(
        "a unique h-attaining component with a singly-used color in an optimal coloring "
        "forces cfc = h", _graphs_where(lambda g: bool(cut_edges(g))), _lemma5),
    CheckId.LEMMA6: CheckDefinition("paths with m edges have cfc = ceil(log2(m+1))", _paths, _lemma6),
    CheckId.LEMMA7: CheckDefinition(
        "trees with Delta >= 3: max(Delta, log2 d) <= cfc <= (Delta-2) log2 n / (log2 Delta - 1)",
        _trees_with_big_degree, _lemma7),
    CheckId.LEMMA8: CheckDefinition(
        "trees with n >= 2t+2: cfc = n-t iff Delta = n-t", _trees, _lemma8),
    CheckId.LEMMA9: CheckDefinition("subtrees never need more colors", _lemma9_corpus, _lemma9),
    CheckId.LEMMA10: CheckDefinition(
        "cfc(H_k) = k and the explicit H_k coloring is conflict-free",
        _spiders(h_graph), _spider_check(color_H)),
    CheckId.LEMMA11: CheckDefinition(
        "cfc(Q_k) = k and the explicit Q_k coloring is conflict-free",
        _spiders(q_graph), _spider_check(color_Q)),
    CheckId.EXAMPLE1: CheckDefinition(
        "G_{l,k} has alpha = l and cfc = k", _example1_corpus, _example1),
    CheckId.REMARK1: CheckDefinition(
        "two stars sharing a leaf: cfc = k > Delta = k-1 with 2*Delta = alpha + 1",
        _remark_corpus(remark1_tree, "remark1_ks"), _remark1),
    CheckId.REMARK2: CheckDefinition(
        "two stars joined leaf to leaf: cfc = Delta = k although 2*Delta < alpha + 2",
        _remark_corpus(remark2_tree, "remark2_ks"), _remark2),
}


def definition(check_id: CheckId) -> CheckDefinition:
    return CHECKS[CheckId(check_id)]


def instances_for(check_id: CheckId, bounds: CorpusBounds, seed: int) -> List[Instance]:
    return definition(check_id).corpus(bounds, seed)


def evaluate(check_id: CheckId, inst: Instance, ctx: CheckContext) -> Outcome:
    return definition(check_id).predicate(inst, ctx)


__all__ = ["CHECKS", "CheckDefinition", "definition", "evaluate", "instances_for"]
