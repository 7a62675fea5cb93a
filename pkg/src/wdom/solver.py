"""Exact computation of the w-domination number and the secure
w-domination number.

The search is iterative deepening on the total weight k. For each k a
depth-first search assigns labels to vertices in id order, smallest label
first, so the first labeling found at the first feasible k is the
lexicographically smallest optimal one. Pruning:

* neighborhood sums are maintained incrementally; a vertex whose remaining
  requirement exceeds what the leftover budget (or its undecided neighbors)
  can still provide cuts the branch;
* a zero vertex is tested for a defender once its closed neighborhood is
  decided, again when its radius-2 ball is, and exactly once its radius-3
  ball is (the move u->v only touches sums inside that ball);
* suffix bounds in the style of Russian doll search: the tails
  ``j..n-1`` of the vertex order are solved first, back to front, keeping
  only the constraints that live entirely inside the tail. Each tail
  optimum is a lower bound on what the remaining budget must cover;
* lex-leader constraints ``f <= f∘σ`` for known automorphisms σ (twin swaps
  by default, anything else the caller passes in). The lexicographically
  smallest optimum always satisfies them, so they never change the answer
  or the witness.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Sequence

from .domination import Labeling, WeightVector, is_secure_w_dominating, is_w_dominating
from .graph import Graph, twin_transpositions

__all__ = [
    "Status",
    "SolverConfig",
    "SolverStats",
    "DominationResult",
    "WeightGroup",
    "solve",
    "solve_iterative",
    "lower_bound",
]


class Status(str, enum.Enum):
    OK = "ok"
    INFEASIBLE = "infeasible"
    BUDGET = "budget"
    KMAX = "kmax"


@dataclass(frozen=True)
class WeightGroup:
    """Restrict the total label weight on ``members`` to ``lo..hi``."""

    members: tuple[int, ...]
    lo: int = 0
    hi: int | None = None


@dataclass(frozen=True)
class SolverConfig:
    secure: bool = False
    node_budget: int | None = None
    workers: int = 1
    # extra automorphisms of the input graph used for lex-leader pruning
    symmetries: tuple[tuple[int, ...], ...] = ()
    use_twins: bool = True
    groups: tuple[WeightGroup, ...] = ()
    # solve every suffix of the vertex order first and use the optima as bounds
    suffix_bounds: bool = True

    def __post_init__(self):
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass
class SolverStats:
    nodes: int = 0
    elapsed: float = 0.0
    levels: list[int] = field(default_factory=list)


@dataclass
class DominationResult:
    status: Status
    value: int | None
    witness: Labeling | None
    lower_bound: int
    upper_bound: int | None
    secure: bool
    w: WeightVector
    stats: SolverStats

    @property
    def ok(self) -> bool:
        return self.status is Status.OK

    def as_dict(self) -> dict:
        return {
            "w": list(self.w.entries),
            "secure": self.secure,
            "value": self.value,
            "witness": list(self.witness.values) if self.witness else None,
            "status": self.status.value,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "nodes": self.stats.nodes,
            "ms": int(round(self.stats.elapsed * 1000)),
        }


class _BudgetHit(Exception):
    pass


def lower_bound(g: Graph, w: WeightVector | Sequence[int]) -> int:
    """Counting bound valid for plain and secure w-domination alike.

    Summing f(N(v)) over all v counts each f(u) deg(u) times, so
    ``Δ·ω(f) >= Σ_v w[f(v)]``. The smallest weight for which some multiset
    of labels satisfies that inequality is returned (``l·n + 1`` when none
    does, which proves infeasibility).
    """
    w = w if isinstance(w, WeightVector) else WeightVector(w)
    n, l, e = g.n, w.l, w.entries
    delta = g.max_degree()
    target = n * e[0]
    gain = [None] + [delta * i - e[i] + e[0] for i in range(1, l + 1)]
    top = l * n
    neg = float("-inf")
    best = [neg] * (top + 1)
    best[0] = 0
    for k in range(top + 1):
        if k > 0:
            best[k] = max((best[k - i] + gain[i] for i in range(1, min(l, k) + 1)), default=neg)
        if best[k] >= target:
            return k
    return top + 1


class _Shared:
    """Per-instance precomputation reused by every suffix search."""

    def __init__(self, g: Graph, w: WeightVector, cfg: SolverConfig):
        n = g.n
        self.g, self.w, self.cfg, self.n = g, w, cfg, n
        adj = g.adjacency
        self.t1 = [max((v,) + adj[v]) for v in range(n)]
        self.closed = [(v,) + adj[v] for v in range(n)]
        self.closed_min = [min(c) for c in self.closed]
        # security check times, and the smallest id the exact check reads
        self.sec_times: list[tuple[int, ...]] = [()] * n
        self.ball3_min = [0] * n
        if cfg.secure:
            ball = [set(c) for c in self.closed]
            ball2 = [set().union(*(ball[u] for u in ball[v])) for v in range(n)]
            ball3 = [set().union(*(ball2[u] for u in ball[v])) for v in range(n)]
            for v in range(n):
                self.sec_times[v] = tuple(sorted({self.t1[v], max(ball2[v]), max(ball3[v])}))
                self.ball3_min[v] = min(ball3[v])

        self.group_of = [-1] * n
        self.group_lo: list[int] = []
        self.group_hi: list[int] = []
        self.group_min: list[int] = []
        for gi, grp in enumerate(cfg.groups):
            for v in grp.members:
                if self.group_of[v] != -1:
                    raise ValueError(f"vertex {v} belongs to two weight groups")
                self.group_of[v] = gi
            self.group_lo.append(grp.lo)
            self.group_hi.append(w.l * len(grp.members) if grp.hi is None else grp.hi)
            self.group_min.append(min(grp.members, default=n))

        perms = [(tuple(p), True) for p in cfg.symmetries]
        if cfg.use_twins:
            perms += [(p, False) for p in twin_transpositions(g)]
        self.perms: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        seen = set()
        for p, supplied in perms:
            if p in seen:
                continue
            seen.add(p)
            try:
                self._validate_perm(p)
            except ValueError:
                # twins that cross weight groups are simply not used
                if supplied:
                    raise
                continue
            support = tuple(v for v in range(n) if p[v] != v)
            if support:
                self.perms.append((support, p))

    def _validate_perm(self, p):
        n, adj = self.n, self.g.adjacency
        if sorted(p) != list(range(n)):
            raise ValueError("symmetry is not a permutation of the vertex ids")
        for v in range(n):
            if tuple(sorted(p[u] for u in adj[v])) != adj[p[v]]:
                raise ValueError("symmetry is not an automorphism of the graph")
        for gi in range(len(self.group_lo)):
            img = {self.group_of[p[v]] for v in range(n) if self.group_of[v] == gi}
            if len(img) != 1:
                raise ValueError("symmetry does not map weight groups onto weight groups")
            gj = img.pop()
            if gj == -1 or (self.group_lo[gj], self.group_hi[gj]) != (self.group_lo[gi], self.group_hi[gi]):
                raise ValueError("symmetry maps a weight group onto one with other bounds")


class _Search:
    """Depth-first search over the vertices ``start..n-1``.

    Only constraints whose whole scope lies in that suffix are enforced, so
    the optimum of a suffix search never exceeds the weight any valid
    labeling of the full graph puts on the suffix. ``suffix_lb[j]`` holds
    such bounds for later suffixes and is used to cut branches.
    """

    def __init__(self, shared: _Shared, start: int = 0, suffix_lb: Sequence[int] | None = None):
        n = shared.n
        g, cfg = shared.g, shared.cfg
        self.shared = shared
        self.n, self.start = n, start
        self.adj = adj = g.adjacency
        self.wv = shared.w.entries
        self.l = shared.w.l
        self.secure = cfg.secure
        self.suffix_lb = list(suffix_lb) if suffix_lb is not None else [0] * (n + 1)

        t1 = shared.t1
        live = [v >= start and shared.closed_min[v] >= start for v in range(n)]
        self.later_nbrs = [tuple(u for u in adj[v] if u > v and live[u]) for v in range(n)]
        # decided vertices whose requirement can still change at depth i
        self.watch: list[tuple[int, ...]] = [()] * n
        open_ = []
        for i in range(start, n):
            if live[i]:
                open_.append(i)
            open_ = [x for x in open_ if t1[x] >= i]
            self.watch[i] = tuple(open_)
        backdeg = [sum(1 for u in adj[v] if start <= u < v) for v in range(n)]
        self.backmax = [0] * (n + 1)
        for i in range(n - 1, start - 1, -1):
            self.backmax[i] = max(self.backmax[i + 1], backdeg[i])

        self.sched: list[list[int]] = [[] for _ in range(n)]
        if cfg.secure:
            for v in range(start, n):
                if shared.ball3_min[v] >= start:
                    for t in shared.sec_times[v]:
                        self.sched[t].append(v)

        self.group_of = shared.group_of
        self.group_hi = shared.group_hi
        self.group_lo = [lo if shared.group_min[gi] >= start else 0
                         for gi, lo in enumerate(shared.group_lo)]
        self.group_size = [0] * len(shared.group_lo)
        for v in range(start, n):
            if self.group_of[v] >= 0:
                self.group_size[self.group_of[v]] += 1

        self.perms_at: list[list[tuple]] = [[] for _ in range(n)]
        for support, p in shared.perms:
            if support[0] >= start:
                for v in support:
                    self.perms_at[v].append((support, p))

    # -- state -------------------------------------------------------------

    def reset(self, k: int, node_limit: int | None):
        n = self.n
        self.lab = [-1] * n
        self.s = [0] * n
        self.und = [len(a) for a in self.adj]
        self.budget = k
        self.gw = [0] * len(self.group_lo)
        self.gund = list(self.group_size)
        self.nodes = 0
        self.node_limit = node_limit

    def _assign(self, i, a):
        self.lab[i] = a
        self.budget -= a
        s, und = self.s, self.und
        for x in self.adj[i]:
            s[x] += a
            und[x] -= 1
        gi = self.group_of[i]
        if gi >= 0:
            self.gw[gi] += a
            self.gund[gi] -= 1

    def _unassign(self, i, a):
        self.lab[i] = -1
        self.budget += a
        s, und = self.s, self.und
        for x in self.adj[i]:
            s[x] -= a
            und[x] += 1
        gi = self.group_of[i]
        if gi >= 0:
            self.gw[gi] -= a
            self.gund[gi] += 1

    # -- pruning -----------------------------------------------------------

    def _open_ok(self, x, B):
        """Can the undecided vertex x still be satisfied by some label?"""
        wv, s, l = self.wv, self.s, self.l
        cap = l * self.und[x]
        sx = s[x]
        for b in range(min(l, B) + 1):
            r = B - b
            if sx + (r if r < cap else cap) >= wv[b]:
                return True
        return False

    def _consistent(self, i, a):
        lab, s, und, wv, l = self.lab, self.s, self.und, self.wv, self.l
        B = self.budget
        if B < self.suffix_lb[i + 1]:
            return False
        gi = self.group_of[i]
        if gi >= 0 and self.gw[gi] + l * self.gund[gi] < self.group_lo[gi]:
            return False
        total = 0
        for x in self.watch[i]:
            need = wv[lab[x]] - s[x]
            if need > 0:
                cap = l * und[x]
                if need > (B if B < cap else cap):
                    return False
                total += need
        if total > B * self.backmax[i + 1]:
            return False
        for x in self.later_nbrs[i]:
            if not self._open_ok(x, B):
                return False
        for support, p in self.perms_at[i]:
            for q in support:
                a1 = lab[q]
                a2 = lab[p[q]]
                if a1 < 0 or a2 < 0 or a1 < a2:
                    break
                if a1 > a2:
                    return False
        if self.secure:
            for v in self.sched[i]:
                if lab[v] == 0 and not self._defensible(v):
                    return False
        return True

    def _defensible(self, v):
        lab = self.lab
        for u in self.adj[v]:
            if lab[u] < 0:
                return True
            if lab[u] > 0 and self._move_possible(u, v):
                return True
        return False

    def _move_possible(self, u, v):
        lab, s, und, wv, l, adj = self.lab, self.s, self.und, self.wv, self.l, self.adj
        B = self.budget
        lab[u] -= 1
        lab[v] = 1
        for x in adj[u]:
            s[x] -= 1
        for x in adj[v]:
            s[x] += 1
        ok = True
        for group in ((u, v), adj[u], adj[v]):
            for x in group:
                lx = lab[x]
                if lx >= 0:
                    need = wv[lx] - s[x]
                    if need > 0:
                        cap = l * und[x]
                        if need > (B if B < cap else cap):
                            ok = False
                            break
                elif not self._open_ok(x, B):
                    ok = False
                    break
            if not ok:
                break
        for x in adj[u]:
            s[x] += 1
        for x in adj[v]:
            s[x] -= 1
        lab[u] += 1
        lab[v] = 0
        return ok

    # -- search ------------------------------------------------------------

    def _top_label(self, i):
        top = min(self.l, self.budget)
        gi = self.group_of[i]
        if gi >= 0:
            top = min(top, self.group_hi[gi] - self.gw[gi])
        return top

    def _dfs(self, i):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _BudgetHit
        if i == self.n:
            return True
        for a in range(self._top_label(i) + 1):
            self._assign(i, a)
            if self._consistent(i, a) and self._dfs(i + 1):
                return True
            self._unassign(i, a)
        return False

    def run(self, k, prefix=(), node_limit=None):
        """Search labelings of weight <= k extending ``prefix``; returns the
        labeling values or None."""
        self.reset(k, node_limit)
        for i, a in enumerate(prefix, self.start):
            if a > self._top_label(i):
                return None
            self._assign(i, a)
            if not self._consistent(i, a):
                return None
        if self._dfs(self.start + len(prefix)):
            return tuple(self.lab)
        return None

    def prefixes(self, k, depth):
        """All consistent assignments of the first ``depth`` vertices, in
        lexicographic order."""
        self.reset(k, None)
        out = []

        def rec(i):
            if i == depth:
                out.append(tuple(self.lab[:depth]))
                return
            if i == self.n:
                return
            for a in range(self._top_label(i) + 1):
                self._assign(i, a)
                if self._consistent(i, a):
                    rec(i + 1)
                self._unassign(i, a)

        rec(0)
        return out


_worker_search: _Search | None = None


def _worker_init(g, w, cfg, suffix_lb):
    global _worker_search
    _worker_search = _Search(_Shared(g, w, cfg), 0, suffix_lb)


def _worker_run(k, prefix, node_limit):
    try:
        found = _worker_search.run(k, prefix, node_limit)
        return found, _worker_search.nodes, False
    except _BudgetHit:
        return None, _worker_search.nodes, True


def _parallel_level(search: _Search, cfg, k, node_limit):
    g, w = search.shared.g, search.shared.w
    depth = 1
    prefixes = search.prefixes(k, depth)
    while len(prefixes) < 4 * cfg.workers and depth < g.n:
        depth += 1
        prefixes = search.prefixes(k, depth)
    nodes = 0
    hit = False
    init = (g, w, replace(cfg, workers=1), search.suffix_lb)
    with ProcessPoolExecutor(cfg.workers, initializer=_worker_init, initargs=init) as ex:
        futures = [ex.submit(_worker_run, k, p, node_limit) for p in prefixes]
        results = [f.result() for f in futures]
    for found, used, budget_hit in results:
        nodes += used
        hit = hit or budget_hit
    # earliest prefix wins, which keeps the witness independent of scheduling
    for found, _, budget_hit in results:
        if budget_hit:
            break
        if found is not None:
            return found, nodes, False
    return None, nodes, hit


def solve_iterative(g: Graph, w: WeightVector | Sequence[int], cfg: SolverConfig | None = None,
                    k_max: int | None = None) -> DominationResult:
    """Deepen k up to ``k_max``.

    Before the full search, the suffixes ``n-1..``, ``n-2..``, ... are solved
    in turn (each one bounded by the suffixes after it), which yields a
    lower bound on the weight of every tail of the vertex order. The full
    search then starts at the best of those bounds and the counting bound.
    """
    w = w if isinstance(w, WeightVector) else WeightVector(w)
    cfg = cfg or SolverConfig()
    n, top = g.n, w.l * g.n
    k_max = top if k_max is None else k_max
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    t0 = time.perf_counter()
    stats = SolverStats()
    shared = _Shared(g, w, cfg)
    suffix_lb = [0] * (n + 1)

    def result(status, value=None, witness=None, lower=None, upper=None):
        stats.elapsed = time.perf_counter() - t0
        return DominationResult(status, value, witness, lower, upper, cfg.secure, w, stats)

    def remaining():
        return None if cfg.node_budget is None else cfg.node_budget - stats.nodes

    if cfg.suffix_bounds:
        for start in range(n - 1, 0, -1):
            sub = _Search(shared, start, suffix_lb)
            k = suffix_lb[start + 1]
            while True:
                if k > w.l * (n - start):
                    return result(Status.INFEASIBLE, lower=top + 1)
                if k > k_max:
                    return result(Status.KMAX, lower=k)
                try:
                    found = sub.run(k, node_limit=remaining())
                except _BudgetHit:
                    return result(Status.BUDGET, lower=k)
                finally:
                    stats.nodes += sub.nodes
                if found is not None:
                    break
                k += 1
            suffix_lb[start] = k

    search = _Search(shared, 0, suffix_lb)
    k = max(lower_bound(g, w), suffix_lb[1])
    while k <= min(k_max, top):
        stats.levels.append(k)
        try:
            if cfg.workers > 1:
                found, used, hit = _parallel_level(search, cfg, k, remaining())
                stats.nodes += used
                if hit:
                    raise _BudgetHit
            else:
                try:
                    found = search.run(k, node_limit=remaining())
                finally:
                    stats.nodes += search.nodes
        except _BudgetHit:
            return result(Status.BUDGET, lower=k, upper=None)
        if found is not None:
            f = Labeling(found, w)
            check = is_secure_w_dominating(g, w, f)[0] if cfg.secure else is_w_dominating(g, w, f)
            if not check:
                raise AssertionError(f"solver produced an invalid witness {found}")
            return result(Status.OK, f.weight, f, f.weight, f.weight)
        k += 1
    if k > top:
        return result(Status.INFEASIBLE, lower=k)
    return result(Status.KMAX, lower=k)


def solve(g: Graph, w: WeightVector | Sequence[int], cfg: SolverConfig | None = None) -> DominationResult:
    """γ_w(G) (or γ_w^s(G) with ``cfg.secure``) with a lexicographically
    smallest optimal witness."""
    return solve_iterative(g, w, cfg, None)
