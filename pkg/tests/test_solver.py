import pytest
from hypothesis import given, settings, strategies as st

from naive import naive_value
from wdom.domination import WeightVector, is_secure_w_dominating, is_w_dominating
from wdom.graph import (complete, cycle, from_edges, lexicographic_product, path, product_symmetries,
                        relabel, star)
from wdom.harness import random_graph
from wdom.solver import SolverConfig, Status, WeightGroup, lower_bound, solve, solve_iterative

MATRIX = ((1, 0), (1, 1), (1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 0), (2, 2, 0), (2, 2, 1), (2, 2, 2))


@pytest.mark.parametrize("seed", range(12))
def test_matches_brute_force(seed):
    g = random_graph(5 + seed % 2, 0.45, 1000 + seed)
    for w in MATRIX:
        for secure in (False, True):
            r = solve(g, w, SolverConfig(secure=secure))
            value, lexmin = naive_value(g, w, secure)
            assert r.value == value
            if value is not None:
                assert r.witness.values == lexmin
            else:
                assert r.status is Status.INFEASIBLE


def test_known_values():
    assert solve(cycle(6), (2, 2, 2)).value == 6
    assert solve(path(3), (1, 0), SolverConfig(secure=True)).value == 2
    assert solve(complete(5), (1, 0, 0), SolverConfig(secure=True)).value == 1
    assert solve(star(5), (1, 0)).value == 1


def test_infeasible_isolated_vertex():
    g = from_edges(3, [(0, 1)])
    r = solve(g, (1, 1))
    assert r.status is Status.INFEASIBLE and r.value is None and r.witness is None


def test_budget_and_kmax():
    p, idx = lexicographic_product(path(4), cycle(7))
    r = solve(p, (1, 0), SolverConfig(secure=True, node_budget=50))
    assert r.status is Status.BUDGET and r.value is None
    r = solve_iterative(cycle(9), (2, 2, 2), None, k_max=5)
    assert r.status is Status.KMAX and r.lower_bound == 6


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(node_budget=0)
    with pytest.raises(ValueError):
        SolverConfig(workers=0)
    with pytest.raises(ValueError):
        solve(path(3), (1, 0), SolverConfig(symmetries=((1, 0, 2),)))


def test_groups_restrict_weight():
    g = path(4)
    free = solve(g, (1, 0)).value
    forced = solve(g, (1, 0), SolverConfig(groups=(WeightGroup((0, 1), 2, 2),))).value
    assert free == 2 and forced == 3
    capped = solve(g, (1, 0), SolverConfig(groups=(WeightGroup((1, 2), 0, 0),)))
    assert capped.value == 2 and capped.witness.values == (1, 0, 0, 1)


def test_symmetry_breaking_keeps_optimum():
    g, h = path(3), cycle(4)
    p, idx = lexicographic_product(g, h)
    plain = solve(p, (1, 0), SolverConfig(secure=True, use_twins=False))
    sym = solve(p, (1, 0), SolverConfig(secure=True, symmetries=tuple(product_symmetries(g, h, idx))))
    assert plain.value == sym.value
    assert plain.witness.values == sym.witness.values


def test_suffix_bounds_do_not_change_results():
    for seed in range(6):
        g = random_graph(7, 0.4, seed)
        for w in ((2, 2, 1), (1, 1, 0)):
            a = solve(g, w, SolverConfig(secure=True, suffix_bounds=False))
            b = solve(g, w, SolverConfig(secure=True))
            assert (a.value, a.witness) == (b.value, b.witness)


def test_parallel_workers_deterministic():
    g = random_graph(8, 0.35, 7, no_isolated=True)
    one = solve(g, (2, 2, 1), SolverConfig(secure=True))
    two = solve(g, (2, 2, 1), SolverConfig(secure=True, workers=2))
    assert one.value == two.value and one.witness.values == two.witness.values


def test_counting_bound_is_valid():
    for seed in range(10):
        g = random_graph(6, 0.5, seed)
        for w in MATRIX:
            r = solve(g, w)
            if r.value is not None:
                assert lower_bound(g, w) <= r.value


graphs = st.integers(2, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12)))


def _build(spec):
    n, pairs = spec
    return from_edges(n, {(min(u, v), max(u, v)) for u, v in pairs if u != v})


@settings(max_examples=40, deadline=None)
@given(graphs, st.sampled_from(MATRIX), st.booleans())
def test_witness_is_valid(spec, w, secure):
    g = _build(spec)
    r = solve(g, w, SolverConfig(secure=secure))
    if r.value is not None:
        wv = WeightVector(w)
        ok = is_secure_w_dominating(g, wv, r.witness)[0] if secure else is_w_dominating(g, wv, r.witness)
        assert ok and r.witness.weight == r.value


@settings(max_examples=30, deadline=None)
@given(graphs, st.sampled_from(MATRIX), st.randoms(use_true_random=False))
def test_value_invariant_under_relabelling(spec, w, rnd):
    g = _build(spec)
    order = list(range(g.n))
    rnd.shuffle(order)
    assert solve(g, w).value == solve(relabel(g, order), w).value


@settings(max_examples=30, deadline=None)
@given(graphs, st.sampled_from(MATRIX))
def test_secure_never_below_plain_when_defined(spec, w):
    g = _build(spec)
    plain = solve(g, w).value
    sec = solve(g, w, SolverConfig(secure=True)).value
    if sec is not None:
        assert plain is not None and plain <= sec
