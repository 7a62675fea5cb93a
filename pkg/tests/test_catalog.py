import csv
import io
import json

import pytest

from wdom import catalog as cat
from wdom.graph import cycle, lexicographic_product, parse_graph_expr, path, product_symmetries
from wdom.solver import SolverConfig, solve


def _solve(g, w, secure):
    return solve(g, w, SolverConfig(secure=secure)).value


@pytest.mark.parametrize("key", [k for k, f in cat.PATH_FORMULAS.items() if f.h_case is None])
def test_path_formulas_match_solver(key):
    f = cat.PATH_FORMULAS[key]
    for n in range(f.min_n, 13):
        assert _solve(path(n), f.target.w, f.target.secure) == f(n), (key, n)


@pytest.mark.parametrize("key", [k for k, f in cat.CYCLE_FORMULAS.items() if f.h_case is None])
def test_cycle_formulas_match_solver(key):
    f = cat.CYCLE_FORMULAS[key]
    for n in range(f.min_n, 13):
        assert _solve(cycle(n), f.target.w, f.target.secure) == f(n), (key, n)


def test_domain_errors_name_the_domain():
    with pytest.raises(cat.DomainError, match="n >= 6") as exc:
        cat.path_value("s100", 5)
    assert exc.value.min_n == 6
    with pytest.raises(KeyError):
        cat.path_formula("nope")


def test_table_values():
    assert [cat.path_value("221", n) for n in range(6, 14)] == [6, 6, 8, 9, 9, 10, 11, 12]
    assert cat.cycle_value("s111", 7) == 5
    assert cat.path_value("s100", 7) == 3
    assert cat.cycle_value("s110", 4) == 3 and cat.cycle_value("s110", 7) == 5


def test_secure_domination_dispatch():
    H = cat.HClass
    cases = {
        "i": H(1, 1, None, True), "ii": H(1, 2), "iii": H(1, 3), "iv": H(2, 2),
        "v": H(2, 3), "vi": H(3, 3), "vii": H(3, 4),
    }
    for label, h in cases.items():
        assert cat.secure_domination_case(h) == label
    assert cat.classify_case_secure_domination(H(1, 2)).target == cat.P210
    r = cat.classify_case_secure_domination(H(2, 2))
    assert r.kind == "bounds" and (r.lower, r.upper) == (cat.S110, cat.P220)
    with pytest.raises(cat.CaseError):
        cat.secure_domination_case(H(3, 2))
    with pytest.raises(cat.CaseError):
        cat.secure_domination_case(H(1, 1, None, False))
    with pytest.raises(cat.CaseError):
        cat.secure_domination_case(H(1, 1, None, True, False))


def test_weak_roman_and_secure_total_dispatch():
    H = cat.HClass
    assert cat.classify_case_weak_roman(H(1, 1, None, True)).target == cat.S100
    assert cat.classify_case_weak_roman(H(1, 3)).target == cat.P210
    assert cat.classify_case_weak_roman(H(2, 3)).target == cat.P221
    assert cat.classify_case_secure_total(H(1, 1, 2, True)).target == cat.S110
    assert cat.classify_case_secure_total(H(1, 2, 3)).target == cat.S111
    assert cat.classify_case_secure_total(H(2, 3, 4)).target == cat.P221
    assert cat.classify_case_secure_total(H(3, 3, 5)).target == cat.P222
    with pytest.raises(cat.CaseError):
        cat.classify_case_secure_total(H(2, 2))


def test_multipartite_domains():
    h = cat.HClass(1, 2, 3)
    assert cat.multipartite_value("secure-dom", "Kn", h, 4) == 2
    with pytest.raises(cat.DomainError):
        cat.multipartite_value("secure-dom", "Kn", h, 3)
    with pytest.raises(cat.DomainError):
        cat.multipartite_value("weak-roman", "Knr", h, 2, 3)
    with pytest.raises(cat.CaseError):
        cat.multipartite_value("weak-roman", "Kn", cat.HClass(2, 2), 4)
    with pytest.raises(ValueError):
        cat.multipartite_value("secure-dom", "Kx", h, 4)


def _fact_value(f, params):
    expr = f.instantiate(**params)
    return _solve(parse_graph_expr(expr).graph, f.w, f.secure), expr


def test_fact_table_matches_solver():
    for f in cat.fact_table():
        if f.h_class is not None:
            continue
        for p in f.sample_params(2):
            v, expr = _fact_value(f, p)
            err = cat.fact_erratum(expr, f.w, f.secure)
            if err is None:
                assert v == f.value, (f.family, expr, f.w, f.secure)
            else:
                assert v == err.exact != f.value


def test_errata_are_real_disagreements():
    for e in cat.ERRATA:
        g = parse_graph_expr(e.where).graph
        assert _solve(g, e.w, e.secure) == e.exact != e.stated


def test_product_errata_are_real_disagreements():
    for e in cat.PRODUCT_ERRATA:
        g, h = parse_graph_expr(e.g).graph, parse_graph_expr(e.h).graph
        p, idx = lexicographic_product(g, h)
        cfg = SolverConfig(secure=True, symmetries=tuple(product_symmetries(g, h, idx)))
        assert solve(p, e.w, cfg).value == e.exact != e.stated


def test_product_fact_small():
    f = next(f for f in cat.fact_table() if f.expr == "lex(cycle:4,H)")
    h = cycle(4)
    pg = parse_graph_expr(f.expr, {"H": h})
    a, b, idx = pg.factors
    cfg = SolverConfig(secure=True, symmetries=tuple(product_symmetries(a.graph, b.graph, idx)))
    assert solve(pg.graph, f.w, cfg).value == f.value


def test_fact_instantiation_checks_domain():
    f = next(f for f in cat.fact_table() if f.ordered)
    with pytest.raises(cat.DomainError):
        f.instantiate(n=3, r=4)
    with pytest.raises(ValueError):
        f.instantiate(n=3)


def test_exports_have_the_documented_columns():
    rows = list(csv.DictReader(io.StringIO(cat.export_csv())))
    assert rows and tuple(rows[0]) == cat.COLUMNS
    doc = json.loads(cat.export_json())
    assert len(doc) == len(rows) == len(cat.catalog_rows())
    assert all(set(r) == set(cat.COLUMNS) for r in doc)
    assert not any("Theorem" in r["citation"] for r in doc)
