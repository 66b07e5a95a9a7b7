import json

import pytest

from cfc_lab.coloring import EdgeColoring
from cfc_lab.config import LabConfig
from cfc_lab.construct import color_H, color_Q
from cfc_lab.errors import CorpusTooLarge, GraphError, HarnessError, InvariantViolation, MemoInconsistency
from cfc_lab.families import h_graph, path, star
from cfc_lab.harness import (
    CHECKS,
    CfcMemo,
    CheckDefinition,
    CheckId,
    CheckSpec,
    CorpusBounds,
    Outcome,
    make_bounds,
    recheck,
    run_all,
    run_check,
)
from cfc_lab.harness.checks import _spider_check
from cfc_lab.harness.corpus import CheckContext, Instance, memo_key


def test_lemma6_reports_the_ruler_values():
    report = run_check(CheckSpec(check_id=CheckId.LEMMA6))
    check = report.check(CheckId.LEMMA6)
    assert check.passed and check.instances == 10 and check.failures == 0
    assert check.counterexample is None
    assert report.passed


@pytest.mark.parametrize("check_id", [CheckId.LEMMA10, CheckId.LEMMA11, CheckId.REMARK1,
                                      CheckId.REMARK2, CheckId.EXAMPLE1, CheckId.LEMMA8])
def test_single_checks_pass_on_small_bounds(check_id, small_bounds):
    report = run_check(CheckSpec(check_id=check_id, bounds=small_bounds))
    assert report.passed, report.to_text()


def test_run_all_on_small_bounds(small_bounds):
    report = run_all(small_bounds, seed=3)
    assert len(report.checks) == 19
    assert report.passed, report.to_text()
    lemma4 = report.check(CheckId.LEMMA4)
    assert {"lower_attained", "upper_attained"} <= set(lemma4.notes)
    assert report.check(CheckId.THEOREM2).notes["star_fallbacks"] >= 0


def test_report_rendering(small_bounds):
    report = run_check(CheckSpec(check_id=CheckId.LEMMA6, bounds=small_bounds))
    payload = json.loads(report.render("json"))
    assert payload["schema_version"] == 1
    assert payload["checks"][0]["check_id"] == "lemma6"
    assert report.render("csv").splitlines()[0].startswith("check,instances,failures")
    assert report.render("text").startswith("PASS lemma6")


def _always_fails_beyond_two_edges(monkeypatch):
    original = CHECKS[CheckId.LEMMA6]

    def predicate(inst, ctx):
        return Outcome(inst.graph.m <= 2, {"m": inst.graph.m})

    monkeypatch.setitem(CHECKS, CheckId.LEMMA6,
                        CheckDefinition(original.statement, original.corpus, predicate))


def test_failures_carry_a_reproducible_counterexample(monkeypatch, small_bounds):
    _always_fails_beyond_two_edges(monkeypatch)
    report = run_check(CheckSpec(check_id=CheckId.LEMMA6, bounds=small_bounds))
    check = report.check(CheckId.LEMMA6)
    assert not check.passed and check.failures == 2
    example = check.counterexample
    assert example is not None
    assert example.canonical == min(memo_key(path(3)), memo_key(path(4))).hex()
    assert example.edge_list.startswith(f"{example.n} {len(example.edges)}")
    assert recheck(CheckId.LEMMA6, example, small_bounds)
    assert "FAIL lemma6" in report.to_text()


def test_construction_errors_count_as_failures(monkeypatch, small_bounds):
    original = CHECKS[CheckId.LEMMA6]

    def predicate(inst, ctx):
        raise InvariantViolation("broken on purpose")

    monkeypatch.setitem(CHECKS, CheckId.LEMMA6,
                        CheckDefinition(original.statement, original.corpus, predicate))
    report = run_check(CheckSpec(check_id=CheckId.LEMMA6, bounds=small_bounds))
    check = report.check(CheckId.LEMMA6)
    assert check.failures == small_bounds.path_max_edges
    assert "InvariantViolation" in check.counterexample.values["error"]


def test_other_errors_abort_with_context(monkeypatch, small_bounds):
    original = CHECKS[CheckId.LEMMA6]

    def predicate(inst, ctx):
        raise GraphError("solver gave up")

    monkeypatch.setitem(CHECKS, CheckId.LEMMA6,
                        CheckDefinition(original.statement, original.corpus, predicate))
    with pytest.raises(HarnessError, match="lemma6 aborted"):
        run_check(CheckSpec(check_id=CheckId.LEMMA6, bounds=small_bounds))


def test_bounds_are_validated():
    with pytest.raises(CorpusTooLarge):
        make_bounds(max_n_graphs=7)
    assert make_bounds(max_n_graphs=7, edge_limit=21).max_n_graphs == 7
    with pytest.raises(CorpusTooLarge):
        make_bounds(max_n_trees=13)
    with pytest.raises(CorpusTooLarge):
        make_bounds(remark1_ks=[2])
    assert make_bounds(remark2_ks=[4, 3, 3]).remark2_ks == [3, 4]
    assert CorpusBounds().max_n_graphs == 6


def test_memo_spot_checks_catch_inconsistency():
    memo = CfcMemo(LabConfig(memo_spot_check_rate=1.0), seed=0)
    assert memo.cfc(star(5)) == 4
    memo._cfc[memo_key(star(5))] = 2
    with pytest.raises(MemoInconsistency):
        memo.cfc(star(5))


def test_memo_reuses_isomorphic_graphs():
    memo = CfcMemo(LabConfig(memo_spot_check_rate=0.0), seed=0)
    memo.cfc(path(4))
    memo.cfc(path(4))
    assert memo.hits == 1


def test_process_pool_matches_in_process(small_bounds):
    spec = CheckSpec(check_id=CheckId.LEMMA9, bounds=small_bounds, seed=5)
    serial = run_check(spec, config=LabConfig(threads=1))
    parallel = run_check(spec, config=LabConfig(threads=2))
    assert serial.check(CheckId.LEMMA9).instances == parallel.check(CheckId.LEMMA9).instances
    assert serial.passed and parallel.passed


@pytest.mark.slow
def test_default_battery_passes():
    assert run_all().passed


def test_spider_checks_compare_edges_against_the_color_rule(small_bounds):
    ctx = CheckContext.create(small_bounds, LabConfig(), seed=0)
    inst = Instance(h_graph(4), {"k": 4})
    assert _spider_check(color_H)(inst, ctx).values["table_matches"]

    shuffled = _spider_check(lambda k: EdgeColoring(h_graph(k), tuple(reversed(color_H(k).colors))))
    outcome = shuffled(inst, ctx)
    assert not outcome.ok and outcome.values["table_matches"] is False

    assert not _spider_check(color_Q)(inst, ctx).values["table_matches"]
