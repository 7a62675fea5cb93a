import json

import pytest

from wdom import catalog as cat
from wdom import harness as hv
from wdom.graph import complete, cycle, path, star


@pytest.fixture(scope="module")
def hs():
    return hv.Harness()


def test_classify_representatives(hs):
    for family, cases in hv.H_REPRESENTATIVES.items():
        for case in cases:
            hv.representative(family, case, hs)
    cls = hv.classify_H(path(5), hs)
    assert (cls.gamma, cls.sec_dom, cls.sec_tot) == (2, 3, 5)
    assert hv.classify_H(complete(1), hs).is_nontrivial is False


def test_discovered_representatives_cover_every_case(hs):
    found = hv.discover_representatives(6, hs)
    assert set(found) >= {"i", "ii", "iii", "iv", "v"}


def test_product_theorem_pass_and_bounds(hs):
    r = hv.verify_product_theorem(path(3), path(3), "secure-dom", hs)
    assert r.verdict is hv.Verdict.PASS and r.observed == "2"
    r = hv.verify_product_theorem(path(4), cycle(7), "secure-dom", hs)
    assert r.verdict is hv.Verdict.PASS and "[4,4]" in r.checks[0].name


def test_product_theorem_reports_a_real_failure(hs):
    # without the erratum lookup the false prediction is a FAIL
    r = hv.verify_product_theorem(path(3), path(8), "secure-dom", hs)
    assert r.verdict is hv.Verdict.FAIL
    r = hv.verify_product_theorem(path(3), path(8), "secure-dom", hs, exprs=("path:3", "path:8"))
    assert r.verdict is hv.Verdict.PASS and r.checks[0].name == "known erratum reproduced"


def test_isolated_vertex_is_skipped(hs):
    from wdom.graph import from_edges
    r = hv.verify_product_theorem(from_edges(3, [(0, 1)]), path(3), "secure-dom", hs)
    assert r.verdict is hv.Verdict.SKIPPED


def test_inequalities_on_a_cycle(hs):
    r = hv.verify_inequalities(cycle(5), (2, 1, 0), (1, 0, 0), harness=hs)
    assert r.verdict is hv.Verdict.PASS
    assert any("G'" in c.detail for c in r.checks)


def test_plus_one_chain_counterexample(hs):
    # K_{2,3}: secure (2,2,0) needs 5, plain (3,3,0) needs 4
    from wdom.graph import complete_bipartite
    r = hv.verify_inequalities(complete_bipartite(2, 3), (2, 2, 0), harness=hs)
    bad = [c for c in r.checks if c.ok is False]
    assert r.verdict is hv.Verdict.FAIL and len(bad) == 1 and bad[0].detail == "5 <= 4 <= 5"


def test_hypotheses_gate_checks():
    hyp = hv.ineq_hypotheses(path(3), (1, 2))
    assert not hyp["lower-secure"] and not hyp["spanning"]
    hyp = hv.ineq_hypotheses(cycle(4), (2, 2, 1), (1, 1, 0))
    assert hyp["pair"] and hyp["shifted"]


@pytest.mark.parametrize("lemma", ["secure-dom", "weak-roman", "secure-total"])
def test_percopy_lemmas(hs, lemma):
    for g, h in ((path(3), path(3)), (path(2), path(3)), (path(3), complete(2))):
        assert hv.verify_percopy_lemma(g, h, lemma, hs).verdict is hv.Verdict.PASS


def test_percopy_weak_roman_needs_gamma_one(hs):
    r = hv.verify_percopy_lemma(path(3), path(4), "weak-roman", hs)
    assert r.verdict is hv.Verdict.SKIPPED


def test_equivalences(hs):
    assert hv.verify_equivalences(star(5), harness=hs).verdict is hv.Verdict.PASS
    assert hv.verify_equivalences(path(3), complete(2), hs).verdict is hv.Verdict.PASS
    assert hv.verify_equivalences(complete(4), harness=hs).verdict is hv.Verdict.SKIPPED


def test_p11_lift(hs):
    r = hv.verify_p11_lift(harness=hs)
    assert r.verdict is hv.Verdict.PASS
    assert sum(map(int, hv.P11_SEQUENCE)) == cat.path_value("secdom:vi", 11) == 10


def test_budget_exhaustion_is_skipped():
    tiny = hv.Harness(node_budget=5)
    r = hv.verify_product_theorem(path(4), cycle(7), "secure-dom", tiny)
    assert r.verdict is hv.Verdict.SKIPPED and "budget" in r.observed


def test_random_graph_deterministic():
    a = hv.random_graph(7, 0.4, 3)
    assert a == hv.random_graph(7, 0.4, 3)
    assert hv.min_degree(hv.random_graph(6, 0.3, 1, no_isolated=True)) >= 1
    with pytest.raises(ValueError):
        hv.random_graph(4, 1.5, 0)


def test_connected_graph_counts():
    counts = [len(hv.connected_graphs(k, k)) for k in (3, 4, 5, 6)]
    assert counts == [2, 6, 21, 112]
    with pytest.raises(ValueError):
        hv.connected_graphs(3, 8)


@pytest.mark.parametrize("suite", ["secure-dom", "secure-total", "weak-roman", "lemmas", "facts"])
def test_fast_suites_pass(hs, suite):
    reports = hv.run_suite(suite, hs)
    assert reports and all(r.verdict is hv.Verdict.PASS for r in reports), hv.format_reports(
        [r for r in reports if r.verdict is not hv.Verdict.PASS])
    assert [r.case_id for r in reports] == sorted(r.case_id for r in reports)


def test_unknown_suite():
    with pytest.raises(KeyError):
        hv.run_suite("nope")


def test_report_output(hs):
    reports = hv.run_suite("secure-total", hs)
    text = hv.format_reports(reports)
    assert text.splitlines()[-1].startswith(f"{len(reports)} cases: {len(reports)} PASS")
    doc = json.loads(hv.reports_json(reports))
    assert {"case", "predicted", "observed", "verdict", "ms", "checks"} <= set(doc[0])
