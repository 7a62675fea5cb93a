"""Simple undirected graphs on dense vertex ids, plus the constructors used
throughout the package: paths, cycles, complete and complete bipartite
graphs, stars, disjoint unions, lexicographic products and a few fixed
gadget graphs.

Graphs are immutable. Vertex ids are ``0..n-1`` and every adjacency list is
sorted, so two graphs compare equal exactly when their edge sets do.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "ProductIndex",
    "from_edges",
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "empty",
    "disjoint_union",
    "lexicographic_product",
    "figure1_graph",
    "figure2_graph",
    "min_degree",
    "is_spanning_subgraph",
    "twin_transpositions",
    "automorphisms",
    "product_symmetries",
    "parse_edge_list",
    "format_edge_list",
    "relabel",
    "ParsedGraph",
    "parse_graph_expr",
]


class GraphError(ValueError):
    """Invalid graph construction or malformed graph input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"adjacency of {v} is not sorted and duplicate-free")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def max_degree(self) -> int:
        return max(len(a) for a in self.adjacency)

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adjacency)

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"no edge ({u},{v})")
        return from_edges(self.n, [e for e in self.edges() if e != (min(u, v), max(u, v))])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class ProductIndex:
    """Row-major id layout of a product on ``V(G) x V(H)``."""

    g_size: int
    h_size: int

    def vertex(self, x: int, y: int) -> int:
        if not (0 <= x < self.g_size and 0 <= y < self.h_size):
            raise IndexError(f"pair ({x},{y}) out of range")
        return x * self.h_size + y

    def pair(self, vid: int) -> tuple[int, int]:
        if not 0 <= vid < self.g_size * self.h_size:
            raise IndexError(f"vertex {vid} out of range")
        return divmod(vid, self.h_size)

    def copy(self, x: int) -> range:
        """Vertex ids of the copy of H sitting over ``x``."""
        return range(x * self.h_size, (x + 1) * self.h_size)

    def copies(self) -> list[range]:
        return [self.copy(x) for x in range(self.g_size)]


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, rejecting loops, duplicates and out-of-range ends."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u},{v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return from_edges(n, [])


def star(n: int) -> Graph:
    """K_{1,n-1}: center 0 joined to leaves 1..n-1."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return from_edges(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs a, b >= 1")
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    return from_edges(g1.n + g2.n, g1.edges() + [(u + off, v + off) for u, v in g2.edges()])


def lexicographic_product(g: Graph, h: Graph) -> tuple[Graph, ProductIndex]:
    """G∘H: (u,v)(x,y) is an edge iff ux ∈ E(G), or u = x and vy ∈ E(H)."""
    idx = ProductIndex(g.n, h.n)
    k = h.n
    adj = []
    for x in range(g.n):
        outer = [xx * k + yy for xx in g.adjacency[x] for yy in range(k)]
        for y in range(k):
            inner = [x * k + yy for yy in h.adjacency[y]]
            adj.append(tuple(sorted(outer + inner)))
    return Graph(g.n * k, tuple(adj)), idx


def figure1_graph() -> Graph:
    """Two 5-cycles a1..a5 (ids 0-4) and b1..b5 (ids 5-9) with chords a1a3,
    b1b3 and the bridge a1b1."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    edges += [(0, 2), (5, 7), (0, 5)]
    return from_edges(10, edges)


def _double_spider_edges(off: int = 0) -> list[tuple[int, int]]:
    # center 0, hub 1 with leaves 2,3,4, hub 5 with leaves 6,7,8
    e = [(0, 1), (0, 5)] + [(1, j) for j in (2, 3, 4)] + [(5, j) for j in (6, 7, 8)]
    return [(u + off, v + off) for u, v in e]


def _two_hub_edges(off: int = 0) -> list[tuple[int, int]]:
    # hub 1 (leaves 2,3,4) on 0, hub 6 (leaves 7,8,9) on 5, and the edge 0-5
    e = [(0, 1), (0, 5), (5, 6)] + [(1, j) for j in (2, 3, 4)] + [(6, j) for j in (7, 8, 9)]
    return [(u + off, v + off) for u, v in e]


def figure2_graph(i: int) -> Graph:
    """The gadget graphs G_1, G_2, G_3.

    G_3 is G_1 (ids 0-8) and G_2 (ids 9-18) joined by the edge (2, 17): leaf 2
    of hub 1 on the left, and the middle leaf of the outer hub 15 on the right.
    """
    if i == 1:
        return from_edges(9, _double_spider_edges())
    if i == 2:
        return from_edges(10, _two_hub_edges())
    if i == 3:
        return from_edges(19, _double_spider_edges() + _two_hub_edges(9) + [(2, 17)])
    raise GraphError(f"figure2_graph index must be 1, 2 or 3, got {i}")


def min_degree(g: Graph) -> int:
    return min(len(a) for a in g.adjacency)


def is_spanning_subgraph(sub: Graph, g: Graph) -> bool:
    if sub.n != g.n:
        raise GraphError(f"vertex counts differ: {sub.n} vs {g.n}")
    return all(set(sub.adjacency[v]) <= set(g.adjacency[v]) for v in range(g.n))


def twin_transpositions(g: Graph) -> list[tuple[int, ...]]:
    """Transpositions (x y) of twin vertices, as full permutations.

    x and y are twins when N(x) minus y equals N(y) minus x; swapping them is
    always an automorphism.
    """
    perms = []
    nb = [set(a) for a in g.adjacency]
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if nb[x] - {y} == nb[y] - {x}:
                p = list(range(g.n))
                p[x], p[y] = y, x
                perms.append(tuple(p))
    return perms


def automorphisms(g: Graph, limit: int = 10_000) -> list[tuple[int, ...]]:
    """All automorphisms of a small graph by degree-filtered backtracking.

    Raises GraphError when more than ``limit`` automorphisms exist.
    """
    n = g.n
    nb = [set(a) for a in g.adjacency]
    deg = [len(a) for a in g.adjacency]
    image = [-1] * n
    used = [False] * n
    out = []

    def extend(v):
        if v == n:
            out.append(tuple(image))
            if len(out) > limit:
                raise GraphError(f"more than {limit} automorphisms")
            return
        for t in range(n):
            if used[t] or deg[t] != deg[v]:
                continue
            if any((image[u] in nb[t]) != (u in nb[v]) for u in range(v)):
                continue
            image[v] = t
            used[t] = True
            extend(v + 1)
            used[t] = False
        image[v] = -1

    extend(0)
    return out


def product_symmetries(g: Graph, h: Graph, index: ProductIndex | None = None,
                       max_group: int = 5040) -> list[tuple[int, ...]]:
    """Automorphisms of G∘H usable for symmetry breaking.

    Every automorphism of H applied inside a single copy is an automorphism
    of the product, as is swapping the copies over two twin vertices of G.
    """
    index = index or ProductIndex(g.n, h.n)
    total = g.n * h.n
    perms = []
    try:
        h_auts = [a for a in automorphisms(h, limit=max_group) if any(a[i] != i for i in range(h.n))]
    except GraphError:
        h_auts = []
    for x in range(g.n):
        base = x * h.n
        for a in h_auts:
            p = list(range(total))
            for y in range(h.n):
                p[base + y] = base + a[y]
            perms.append(tuple(p))
    for t in twin_transpositions(g):
        x, y = [i for i in range(g.n) if t[i] != i]
        p = list(range(total))
        for j in range(h.n):
            p[index.vertex(x, j)] = index.vertex(y, j)
            p[index.vertex(y, j)] = index.vertex(x, j)
        perms.append(tuple(p))
    return perms


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by m lines ``"u v"`` (0-based)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]):
        raise GraphError("each edge line must hold exactly two vertex ids")
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge ({u},{v})")
        seen.add(key)
    return from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex i is vertex ``order[i]`` of ``g``."""
    pos = {v: i for i, v in enumerate(order)}
    if sorted(pos) != list(range(g.n)):
        raise GraphError("order must be a permutation of the vertex ids")
    return from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


@dataclass(frozen=True)
class ParsedGraph:
    """Result of :func:`parse_graph_expr`; ``factors`` is set for ``lex``."""

    graph: Graph
    expr: str
    factors: tuple["ParsedGraph", "ParsedGraph", ProductIndex] | None = None


_ATOMS = {
    "path": (1, path),
    "cycle": (1, cycle),
    "complete": (1, complete),
    "star": (1, star),
    "kbip": (2, complete_bipartite),
}


def parse_graph_expr(text: str, env: dict[str, Graph] | None = None) -> ParsedGraph:
    """Parse the graph mini-language.

    ``path:n``, ``cycle:n``, ``complete:n``, ``star:n``, ``kbip:a,b``,
    ``fig1``, ``fig2_1`` .. ``fig2_3``, ``union(E1,E2)``, ``lex(E1,E2)``,
    ``file:PATH``. Names in ``env`` (e.g. ``H``) stand for given graphs.
    """
    env = env or {}
    s = text.replace(" ", "")
    pos = 0

    def fail(msg):
        raise GraphError(f"bad graph expression {text!r} at offset {pos}: {msg}")

    def ident():
        nonlocal pos
        start = pos
        while pos < len(s) and (s[pos].isalnum() or s[pos] == "_"):
            pos += 1
        if start == pos:
            fail("expected a name")
        return s[start:pos]

    def number():
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            fail("expected an integer")
        return int(s[start:pos])

    def expect(ch):
        nonlocal pos
        if pos >= len(s) or s[pos] != ch:
            fail(f"expected {ch!r}")
        pos += 1

    def node() -> ParsedGraph:
        nonlocal pos
        start = pos
        name = ident()
        if name in ("union", "lex"):
            expect("(")
            a = node()
            expect(",")
            b = node()
            expect(")")
            src = s[start:pos]
            if name == "union":
                return ParsedGraph(disjoint_union(a.graph, b.graph), src)
            g, idx = lexicographic_product(a.graph, b.graph)
            return ParsedGraph(g, src, (a, b, idx))
        if name == "file":
            expect(":")
            end = pos
            while end < len(s) and s[end] not in ",)":
                end += 1
            fname, pos = s[pos:end], end
            try:
                with open(fname, encoding="utf-8") as fh:
                    return ParsedGraph(parse_edge_list(fh.read()), s[start:pos])
            except OSError as exc:
                raise GraphError(f"cannot read graph file {fname!r}: {exc}") from None
        if name in _ATOMS:
            arity, make = _ATOMS[name]
            expect(":")
            args = [number()]
            for _ in range(arity - 1):
                expect(",")
                args.append(number())
            return ParsedGraph(make(*args), s[start:pos])
        if name == "fig1":
            return ParsedGraph(figure1_graph(), name)
        if name.startswith("fig2_") and name[5:] in ("1", "2", "3"):
            return ParsedGraph(figure2_graph(int(name[5:])), name)
        if name in env:
            return ParsedGraph(env[name], name)
        fail(f"unknown graph {name!r}")

    out = node()
    if pos != len(s):
        fail("trailing characters")
    return out
