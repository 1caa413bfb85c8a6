"""Acceptance gate: one test per release criterion, one printed line each.

Each criterion prints `[criterion NN] PASS/FAIL <slug> (<elapsed>s) <detail>`
directly to the terminal (bypassing capture) and then asserts, so a plain
pytest run shows the full scorecard.
"""

import json
import random
import time
from itertools import combinations

import pytest

from oracle import naive_local_value
from pathconn.cli import main as cli_main
from pathconn.graphs import complete, complete_bipartite, net
from pathconn.invariants import k_connectivity_cut
from pathconn.random_graphs import RandomGraphSpec, sample_graphs
from pathconn.steiner import (
    EXACT, KAPPA, OMEGA, PI, complete_graph_value, global_connectivity,
    local_connectivity,
)
from pathconn.suites import suite_inequalities, suite_linegraph
from pathconn.transforms import natural_iso_check
from pathconn.witness import (
    prescribed_instance, product_witness_family, product_witness_graph,
    verify_family,
)


@pytest.fixture
def scorecard(capsys, request):
    start = time.perf_counter()

    def report(num, slug, ok, detail=""):
        elapsed = time.perf_counter() - start
        line = (f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'} {slug} "
                f"({elapsed:.1f}s)")
        if detail:
            line += f" {detail}"
        with capsys.disabled():
            print(line, flush=True)
        assert ok, line

    return report


def test_criterion_01_complete_graph_formula(scorecard):
    cases = [(n, 3) for n in range(3, 8)] + [(5, 4), (6, 4), (7, 4)]
    start = time.perf_counter()
    bad = []
    for n, k in cases:
        res = global_connectivity(complete(n), k, PI)
        want = complete_graph_value(n, k)
        if res.status != EXACT or res.value != want:
            bad.append((n, k, res.value, want))
    elapsed = time.perf_counter() - start
    scorecard(1, "complete-graph-formula", not bad and elapsed < 300,
              f"{len(cases)} cases, mismatches={bad}")


def test_criterion_02_bipartite_formula(scorecard):
    bad = []
    for a in range(2, 6):
        for b in range(a, 6):
            res = global_connectivity(complete_bipartite(a, b), 3, PI)
            if res.status != EXACT or res.value != a // 2:
                bad.append((a, b, res.value))
    scorecard(2, "bipartite-triple-formula", not bad, f"mismatches={bad}")


def test_criterion_03_tree_vs_cut_discrimination(scorecard):
    res = global_connectivity(net(), 3, KAPPA)
    cut = k_connectivity_cut(net(), 3)
    ok = res.status == EXACT and res.value == 1 and cut == 2
    scorecard(3, "tree-vs-cut-discrimination", ok,
              f"tree-value={res.value} cut-value={cut}")


def test_criterion_04_complete_minus_any_edge(scorecard):
    g6 = complete(6)
    bad = []
    for e in g6.edges:
        res = global_connectivity(g6.without_edge(*e), 3, PI)
        if res.status != EXACT or res.value != 2:
            bad.append((e, res.value))
    scorecard(4, "complete-minus-edge", not bad,
              f"15 edges, mismatches={bad}")


def test_criterion_05_line_of_bipartite_is_product(scorecard):
    bad = [(r, s) for r in range(1, 7) for s in range(1, 7)
           if not natural_iso_check(r, s)]
    scorecard(5, "line-of-bipartite-is-product", not bad,
              f"36 cases, mismatches={bad}")


def test_criterion_06_product_witness_families(scorecard):
    start = time.perf_counter()
    totals = {}
    bad = 0
    for p, q, sample in ((2, 3, None), (2, 4, 500), (3, 5, 500)):
        g = product_witness_graph(p, q).graph
        if sample is None:
            triples = list(combinations(range(g.n), 3))
        else:
            rng = random.Random(6)
            seen = set()
            while len(seen) < sample:
                seen.add(tuple(sorted(rng.sample(range(g.n), 3))))
            triples = sorted(seen)
        for s in triples:
            fam = product_witness_family(p, q, s, check=False)
            if len(fam) != q or not verify_family(g, s, fam, PI):
                bad += 1
        totals[(p, q)] = len(triples)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and totals[(2, 3)] == 560 and elapsed < 600
    scorecard(6, "product-witness-families", ok,
              f"triples={sum(totals.values())} failures={bad}")


def test_criterion_07_prescribed_instance_end_to_end(scorecard):
    inst = prescribed_instance(2, 3, budget_ms=60_000)
    cert = inst.line_certificate
    cert_ok = (len(cert.family) == 3
               and verify_family(inst.line.graph, cert.terminals,
                                 cert.family, PI))
    ref = inst.refutation
    # The probe may stay unknown within budget; a definite "yes" is also a
    # sound outcome provided it carries an independently verified family
    # (the 3-path certificate then stands as a strict lower bound).
    ref_ok = ref.answer in ("no", "unknown") or (
        ref.answer == "yes" and len(ref.certificate.family) == 4
        and verify_family(inst.line.graph, cert.terminals,
                          ref.certificate.family, PI))
    ok = (inst.base_result.status == EXACT and inst.base_result.value == 2
          and cert_ok and ref_ok)
    scorecard(7, "prescribed-instance", ok,
              f"base={inst.base_result.value} terminals={cert.terminals} "
              f"refutation={ref.answer}")


def test_criterion_08_inequality_suite(scorecard):
    rep = suite_inequalities(seed=1, count=200, n_max=7, m_max=12)
    failing = [c for c in rep.checks if c.verdict == "fail"]
    scorecard(8, "inequality-suite", not failing,
              f"checks={len(rep.checks)} failed={len(failing)} "
              f"inconclusive={rep.inconclusive}"
              + (f" first={failing[0].claim}@{failing[0].instance}"
                 if failing else ""))


def test_criterion_09_line_graph_suite(scorecard):
    rep = suite_linegraph(seed=1, count=50, count_deep=20, budget_ms=20_000)
    failing = [c for c in rep.checks if c.verdict == "fail"]
    scorecard(9, "line-graph-suite", not failing,
              f"checks={len(rep.checks)} failed={len(failing)} "
              f"inconclusive={rep.inconclusive}"
              + (f" first={failing[0].claim}@{failing[0].instance}"
                 if failing else ""))


def test_criterion_10_oracle_equivalence(scorecard):
    spec = RandomGraphSpec(n_min=3, n_max=6, m_min=2, m_max=12,
                           requirement="connected")
    graphs = sample_graphs(spec, seed=10, count=100)
    checked = 0
    bad = []
    for g in graphs:
        for s in combinations(range(g.n), 3):
            for variant in (PI, OMEGA):
                got = local_connectivity(g, s, variant).value
                want = naive_local_value(g, s, variant)
                checked += 1
                if got != want:
                    bad.append((g.edges, s, variant, got, want))
    scorecard(10, "oracle-equivalence", not bad,
              f"instances={len(graphs)} values={checked} mismatches={len(bad)}"
              + (f" first={bad[0]}" if bad else ""))


def test_criterion_11_deterministic_reports(scorecard, tmp_path):
    outs = []
    codes = []
    for name in ("first.json", "second.json"):
        out = tmp_path / name
        codes.append(cli_main(["verify", "--suite", "all", "--seed", "1",
                               "--json", "-o", str(out)]))
        outs.append(out.read_bytes())
    identical = outs[0] == outs[1]
    data = json.loads(outs[0])
    ok = (identical and codes[0] == codes[1] and codes[0] in (0, 2)
          and data["totals"]["failed"] == 0)
    scorecard(11, "deterministic-reports", ok,
              f"bytes={len(outs[0])} identical={identical} exit={codes[0]} "
              f"failed={data['totals']['failed']} "
              f"inconclusive={data['totals']['inconclusive']}")
