import pytest
from hypothesis import given, settings, strategies as st

from wdom.graph import (Graph, GraphError, ProductIndex, automorphisms, complete, complete_bipartite, cycle,
                        disjoint_union, figure1_graph, figure2_graph, format_edge_list, from_edges,
                        is_spanning_subgraph, lexicographic_product, min_degree, parse_edge_list, parse_graph_expr,
                        path, product_symmetries, relabel, star, twin_transpositions)


def test_constructors_sizes():
    assert (path(5).n, path(5).m) == (5, 4)
    assert (cycle(6).n, cycle(6).m) == (6, 6)
    assert complete(4).m == 6 and complete(4).is_complete()
    assert star(4).m == 3 and star(4).degree(0) == 3
    assert complete_bipartite(2, 3).m == 6
    assert path(1).m == 0


def test_invalid_constructions():
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        from_edges(3, [(0, 5)])
    with pytest.raises(GraphError):
        Graph(2, ((1,), ()))


def test_lexicographic_product_adjacency():
    g, h = path(3), path(2)
    p, idx = lexicographic_product(g, h)
    assert p.n == 6
    for a in range(p.n):
        for b in range(a + 1, p.n):
            (x, y), (u, v) = idx.pair(a), idx.pair(b)
            expected = g.has_edge(x, u) or (x == u and h.has_edge(y, v))
            assert p.has_edge(a, b) == expected
    assert list(idx.copy(1)) == [2, 3]


def test_product_index_bounds():
    idx = ProductIndex(3, 4)
    assert idx.vertex(2, 3) == 11 and idx.pair(11) == (2, 3)
    with pytest.raises(IndexError):
        idx.vertex(3, 0)


def test_gadget_graphs():
    f1 = figure1_graph()
    assert f1.n == 10 and f1.is_connected()
    sizes = [figure2_graph(i).n for i in (1, 2, 3)]
    assert sizes[2] == 19
    assert figure2_graph(3).has_edge(2, 17)
    with pytest.raises(GraphError):
        figure2_graph(4)


def test_union_and_min_degree():
    u = disjoint_union(path(2), cycle(3))
    assert u.n == 5 and u.m == 4 and not u.is_connected()
    assert min_degree(u) == 1
    assert min_degree(from_edges(3, [(0, 1)])) == 0


def test_spanning_subgraph():
    c = cycle(5)
    assert is_spanning_subgraph(c.remove_edge(0, 1), c)
    assert not is_spanning_subgraph(complete(5), c)


def test_twins_and_automorphisms():
    assert len(twin_transpositions(star(4))) == 3
    assert len(automorphisms(cycle(5))) == 10
    g, h = path(3), cycle(4)
    p, idx = lexicographic_product(g, h)
    adj = p.adjacency
    for perm in product_symmetries(g, h, idx):
        for v in range(p.n):
            assert tuple(sorted(perm[u] for u in adj[v])) == adj[perm[v]]


def test_edge_list_errors():
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n1 0\n")
    with pytest.raises(GraphError):
        parse_edge_list("3 1\n0 x\n")
    with pytest.raises(GraphError):
        parse_edge_list("")


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.data())
def test_edge_list_round_trip(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = from_edges(n, edges)
    assert parse_edge_list(format_edge_list(g)) == g


def test_relabel_is_isomorphic():
    g = path(4)
    r = relabel(g, [3, 1, 0, 2])
    assert r.m == g.m and sorted(r.degree(v) for v in range(4)) == [1, 1, 2, 2]


def test_graph_expressions(tmp_path):
    assert parse_graph_expr("path:4").graph == path(4)
    assert parse_graph_expr("kbip:2,3").graph == complete_bipartite(2, 3)
    pg = parse_graph_expr("lex(fig2_3,cycle:7)")
    assert (pg.graph.n, pg.graph.m) == (133, 1015)
    assert pg.factors is not None
    u = parse_graph_expr("union(fig1,cycle:4)").graph
    assert (u.n, u.m) == (14, 17)
    f = tmp_path / "g.txt"
    f.write_text(format_edge_list(cycle(5)))
    assert parse_graph_expr(f"file:{f}").graph == cycle(5)
    h = parse_graph_expr("lex(path:2,H)", {"H": complete(3)}).graph
    assert h.n == 6


@pytest.mark.parametrize("bad", ["", "path", "path:x", "lex(path:3", "union(path:3,cycle:4", "nope:3",
                                 "cycle:2", "path:3)", "file:/nonexistent/graph.txt"])
def test_graph_expression_errors(bad):
    with pytest.raises(GraphError):
        parse_graph_expr(bad)
