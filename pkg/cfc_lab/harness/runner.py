"""
🧪 HARNESS RUNNER
Evaluates checks over their corpora, in-process or across a process pool, and
aggregates the outcomes into a Report.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

import structlog
from pydantic import ValidationError

from ..config import DEFAULT_CONFIG, LabConfig
from ..errors import CfcLabError, ConstructionError, CorpusTooLarge, HarnessError
from ..formats import format_edge_list
from ..graph import from_edge_list
from .checks import definition, evaluate, instances_for
from .corpus import CheckContext, Instance, Outcome, memo_key
from .report import CheckId, CheckReport, CheckSpec, Counterexample, CorpusBounds, Report

logger = structlog.get_logger(__name__)

Indexed = Tuple[int, Instance]


def make_bounds(**overrides: Any) -> CorpusBounds:
    """CorpusBounds from keyword overrides; None values keep the defaults."""
    try:
        return CorpusBounds(**{k: v for k, v in overrides.items() if v is not None})
    except ValidationError as exc:
        raise CorpusTooLarge(str(exc)) from None


def _evaluate_one(check_id: CheckId, inst: Instance, ctx: CheckContext) -> Outcome:
    try:
        return evaluate(check_id, inst, ctx)
    except ConstructionError as exc:
        return Outcome(False, {"error": f"{type(exc).__name__}: {exc}"})
    except HarnessError:
        raise
    except CfcLabError as exc:
        raise HarnessError(
            f"{check_id.value} aborted on n={inst.graph.n} edges={list(inst.graph.edges)}: "
            f"{type(exc).__name__}: {exc}"
        ) from exc


def _evaluate_batch(check_id: CheckId, bounds: CorpusBounds, config: LabConfig, seed: int,
                    batch: Sequence[Indexed]) -> List[Tuple[int, Outcome]]:
    ctx = CheckContext.create(bounds, config, seed)
    return [(index, _evaluate_one(check_id, inst, ctx)) for index, inst in batch]


def _batches(items: List[Indexed], count: int) -> List[List[Indexed]]:
    return [items[i::count] for i in range(count) if items[i::count]]


def _evaluate_all(check_id: CheckId, instances: List[Instance], ctx: CheckContext) -> List[Outcome]:
    indexed = list(enumerate(instances))
    threads = ctx.config.threads
    if threads <= 1 or len(indexed) < 2:
        return [_evaluate_one(check_id, inst, ctx) for _, inst in indexed]
    results: List[Tuple[int, Outcome]] = []
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(_evaluate_batch, check_id, ctx.bounds, ctx.config, ctx.seed, batch)
            for batch in _batches(indexed, threads * 4)
        ]
        for future in futures:
            results.extend(future.result())
    return [outcome for _, outcome in sorted(results, key=lambda item: item[0])]


def _counterexample(inst: Instance, outcome: Outcome) -> Counterexample:
    g = inst.graph
    return Counterexample(
        n=g.n,
        edges=list(g.edges),
        edge_list=format_edge_list(g),
        canonical=memo_key(g).hex(),
        params=dict(inst.params),
        values=dict(outcome.values),
    )


def _notes(check_id: CheckId, instances: List[Instance], outcomes: List[Outcome]) -> Dict[str, Any]:
    applicable = [o for o in outcomes if o.applicable]
    notes: Dict[str, Any] = {"applicable": len(applicable)}
    if check_id == CheckId.LEMMA4:
        notes["lower_attained"] = sum(1 for o in applicable if o.values.get("cfc") == o.values.get("h"))
        notes["upper_attained"] = sum(
            1 for o in applicable if o.values.get("cfc") == o.values.get("h", 0) + 1
        )
    if check_id == CheckId.LEMMA5:
        notes["condition_held"] = sum(1 for o in applicable if o.values.get("condition"))
    if check_id == CheckId.THEOREM2:
        notes["star_fallbacks"] = sum(1 for inst in instances if inst.params.get("fallback"))
    return notes


def _run_in_context(check_id: CheckId, ctx: CheckContext) -> CheckReport:
    started = time.perf_counter()
    instances = instances_for(check_id, ctx.bounds, ctx.seed)
    logger.info("🧪 check started", check=check_id.value, instances=len(instances))
    outcomes = _evaluate_all(check_id, instances, ctx)
    failures = [(inst, o) for inst, o in zip(instances, outcomes) if not o.ok]
    counterexample = None
    if failures:
        inst, outcome = min(
            failures, key=lambda item: (memo_key(item[0].graph), sorted(item[0].params.items()))
        )
        counterexample = _counterexample(inst, outcome)
    report = CheckReport(
        check_id=check_id,
        statement=definition(check_id).statement,
        instances=len(instances),
        failures=len(failures),
        passed=not failures,
        counterexample=counterexample,
        notes=_notes(check_id, instances, outcomes),
        wall_time=time.perf_counter() - started,
    )
    if failures:
        logger.warning("❌ check failed", check=check_id.value, failures=len(failures),
                       counterexample=list(counterexample.edges) if counterexample else None)
    else:
        logger.info("✅ check passed", check=check_id.value, instances=len(instances),
                    wall_time=round(report.wall_time, 3))
    return report


def run_check(spec: CheckSpec, *, config: Optional[LabConfig] = None,
              context: Optional[CheckContext] = None) -> Report:
    """Run one check; a shared ``context`` reuses its memo across calls."""
    config = config or DEFAULT_CONFIG
    ctx = context or CheckContext.create(spec.bounds, config, spec.seed)
    started = time.perf_counter()
    check = _run_in_context(spec.check_id, ctx)
    return Report(seed=spec.seed, bounds=spec.bounds, checks=[check], passed=check.passed,
                  wall_time=time.perf_counter() - started)


def run_all(bounds: Optional[CorpusBounds] = None, seed: int = 0,
            config: Optional[LabConfig] = None,
            check_ids: Optional[Sequence[CheckId]] = None) -> Report:
    """Run every check (or ``check_ids``) over shared corpora and one memo."""
    bounds = bounds or CorpusBounds()
    ctx = CheckContext.create(bounds, config or DEFAULT_CONFIG, seed)
    started = time.perf_counter()
    checks = [_run_in_context(CheckId(check_id), ctx) for check_id in (check_ids or list(CheckId))]
    report = Report(seed=seed, bounds=bounds, checks=checks, passed=all(c.passed for c in checks),
                    wall_time=time.perf_counter() - started)
    logger.info("📋 harness finished", checks=len(checks), passed=report.passed,
                memo_hits=ctx.memo.hits, spot_checks=ctx.memo.spot_checks)
    return report


def recheck(check_id: CheckId, counterexample: Counterexample, bounds: Optional[CorpusBounds] = None,
            seed: int = 0, config: Optional[LabConfig] = None) -> bool:
    """Re-evaluate a single reported instance in a fresh context; True when it still fails."""
    bounds = bounds or CorpusBounds()
    ctx = CheckContext.create(bounds, config or DEFAULT_CONFIG, seed)
    graph = from_edge_list(counterexample.n, counterexample.edges)
    outcome = _evaluate_one(CheckId(check_id), Instance(graph, dict(counterexample.params)), ctx)
    return not outcome.ok
