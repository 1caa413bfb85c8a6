import json

import pytest

import pathconn.suites as suites
from pathconn.steiner import EXACT, GlobalResult
from pathconn.suites import (
    FAIL, INCONCLUSIVE, PASS, CheckResult, SuiteReport, exit_code,
    render_reports, reports_to_dict, run_all, serialize_reports,
    suite_construction, suite_formulas, suite_inequalities, suite_linegraph,
)


def test_formulas_suite_passes_at_reduced_scale():
    rep = suite_formulas(max_n=5)
    assert rep.failed == 0
    assert rep.inconclusive == 0
    assert rep.passed == len(rep.checks) > 0
    claims = {c.claim for c in rep.checks}
    assert "complete-path-value" in claims
    assert "bipartite-triple-path-value" in claims
    assert "star-triple-path-zero" in claims


def test_inequalities_suite_passes_at_reduced_scale():
    rep = suite_inequalities(seed=5, count=8, n_max=6, m_max=10)
    assert rep.failed == 0, [c for c in rep.checks if c.verdict == FAIL][:3]
    claims = {c.claim for c in rep.checks}
    assert "tree-vs-cut-discrimination" in claims
    assert "pair-path-equals-connectivity" in claims
    assert "path-ge-scaled-connectivity" in claims


def test_line_suite_passes_at_reduced_scale():
    rep = suite_linegraph(seed=5, count=6, count_deep=2, budget_ms=10_000)
    assert rep.failed == 0, [c for c in rep.checks if c.verdict == FAIL][:3]
    claims = {c.claim for c in rep.checks}
    assert "cycle-self-line-graph" in claims
    assert "line-path-ge-base-edge-path" in claims
    assert "double-line-path-drop" in claims


def test_construction_suite_passes_at_reduced_scale():
    rep = suite_construction(seed=5, pairs=((2, 3),), sample=50,
                             budget_ms=4_000)
    assert rep.failed == 0, [c for c in rep.checks if c.verdict == FAIL][:3]
    claims = {c.claim for c in rep.checks}
    assert "product-witness-families" in claims
    assert "prescribed-base-value" in claims
    assert "complete-witness-families" in claims


def test_construction_suite_accepts_verified_probe_resolution():
    # A large enough probe budget resolves the optimality question at the
    # chosen triple with a verified larger family; that is a sound outcome
    # and must pass (the construction is still a valid lower bound).
    rep = suite_construction(seed=5, pairs=((2, 3),), sample=10,
                             budget_ms=20_000)
    assert rep.failed == 0, [c for c in rep.checks if c.verdict == FAIL][:3]
    probes = [c for c in rep.checks if c.claim == "prescribed-refutation"]
    assert len(probes) == 1
    assert probes[0].observed.startswith("answer=yes verified=True")
    assert probes[0].verdict == PASS


def test_reports_serialize_deterministically():
    reports = [suite_formulas(max_n=4), suite_inequalities(seed=2, count=4)]
    again = [suite_formulas(max_n=4), suite_inequalities(seed=2, count=4)]
    assert serialize_reports(reports) == serialize_reports(again)
    data = json.loads(serialize_reports(reports))
    assert [r["suite"] for r in data["reports"]] == ["formulas", "inequalities"]
    for r in data["reports"]:
        assert r["totals"]["checks"] == len(r["checks"])


def test_different_seed_changes_sampled_instances():
    a = suite_inequalities(seed=2, count=4)
    b = suite_inequalities(seed=3, count=4)
    assert {c.instance for c in a.checks} != {c.instance for c in b.checks}


def test_render_mentions_result_and_counts():
    rep = suite_formulas(max_n=4)
    text = render_reports([rep])
    assert "suite formulas:" in text
    assert "RESULT: PASS" in text


def test_exit_codes():
    ok = SuiteReport("formulas", 1, {})
    ok.record("a", "i", "r", "o", PASS)
    bad = SuiteReport("formulas", 1, {})
    bad.record("a", "i", "r", "o", FAIL)
    soft = SuiteReport("formulas", 1, {})
    soft.record("a", "i", "r", "o", INCONCLUSIVE)
    assert exit_code([ok]) == 0
    assert exit_code([ok, soft]) == 2
    assert exit_code([ok, soft, bad]) == 1
    assert "RESULT: FAIL" in render_reports([bad])


def test_run_all_covers_every_suite_at_tiny_scale():
    reports = run_all(seed=2, count=4, max_n=4, budget_ms=4_000)
    assert [r.suite for r in reports] == list(suites.SUITE_NAMES)
    assert sum(r.failed for r in reports) == 0


def test_corrupted_solver_is_caught():
    """Harness sensitivity: an off-by-one solver must produce failures."""
    real = suites.global_connectivity

    def lying(g, k, variant, budget_ms=None, cap=200_000):
        res = real(g, k, variant, budget_ms=budget_ms, cap=cap)
        return GlobalResult(res.variant, res.k, res.value + 1, EXACT,
                            res.terminals, res.certificate, res.units)

    suites.global_connectivity = lying
    try:
        rep = suite_formulas(max_n=4)
    finally:
        suites.global_connectivity = real
    assert rep.failed >= 1
    failing = [c for c in rep.checks if c.verdict == FAIL]
    # the failing record names a reproducible instance
    assert all(c.instance for c in failing)


def test_corrupted_checker_is_caught():
    """A verifier that rejects everything must fail the construction suite."""
    real = suites.family_violations

    suites.family_violations = lambda g, s, fam, variant: ["injected defect"]
    try:
        rep = suite_construction(seed=5, pairs=((2, 3),), sample=10,
                                 budget_ms=2_000)
    finally:
        suites.family_violations = real
    assert rep.failed >= 1
