"""Closed formulas, case dispatch and fact lists for (secure) w-domination.

Three product families are covered, each reduced to a parameter of the
factor G that is selected by the class of H:

* secure domination  ``γ^s_(1,0)(G∘H)``
* weak Roman domination ``γ^s_(1,0,0)(G∘H)``
* secure total domination ``γ^s_(1,1)(G∘H)``

Every entry states its validity domain. Queries outside the domain raise
:class:`DomainError` instead of extrapolating; the exact solver is the
fallback there.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .domination import WeightVector
from .graph import Graph
from .solver import SolverConfig, solve

__all__ = [
    "DomainError",
    "CaseError",
    "HClass",
    "Target",
    "FormulaResult",
    "Formula",
    "Fact",
    "classify_case_secure_domination",
    "classify_case_weak_roman",
    "classify_case_secure_total",
    "path_value",
    "cycle_value",
    "path_formula",
    "cycle_formula",
    "PATH_FORMULAS",
    "CYCLE_FORMULAS",
    "multipartite_value",
    "fact_table",
    "Erratum",
    "ERRATA",
    "fact_erratum",
    "multipartite_erratum",
    "ProductErratum",
    "PRODUCT_ERRATA",
    "product_erratum",
    "catalog_rows",
    "export_csv",
    "export_json",
]

INF = math.inf


class DomainError(ValueError):
    """Query outside the validity domain of a formula."""

    def __init__(self, message: str, min_n: int | None = None):
        super().__init__(message)
        self.min_n = min_n


class CaseError(ValueError):
    """An H-class that no case of the dispatch covers."""


@dataclass(frozen=True)
class HClass:
    """Case-selecting invariants of H.

    ``sec_tot`` is ``None`` when it was not computed and ``math.inf`` when H
    has an isolated vertex (no secure total dominating function exists).
    """

    gamma: int
    sec_dom: int
    sec_tot: float | int | None = None
    is_complete: bool = False
    is_nontrivial: bool = True

    def __post_init__(self):
        if self.gamma < 1:
            raise CaseError(f"γ(H) must be >= 1, got {self.gamma}")

    def short(self) -> str:
        tot = "-" if self.sec_tot is None else ("inf" if self.sec_tot == INF else str(self.sec_tot))
        return f"γ={self.gamma} γs={self.sec_dom} γst={tot}{' complete' if self.is_complete else ''}"


@dataclass(frozen=True)
class Target:
    """A parameter of G: γ_w(G), or γ^s_w(G) when ``secure``."""

    w: tuple[int, ...]
    secure: bool = False

    def __str__(self):
        return ("γ^s" if self.secure else "γ") + "_(" + ",".join(map(str, self.w)) + ")"


S100 = Target((1, 0, 0), True)
S110 = Target((1, 1, 0), True)
S111 = Target((1, 1, 1), True)
P210 = Target((2, 1, 0))
P211 = Target((2, 1, 1))
P220 = Target((2, 2, 0))
P221 = Target((2, 2, 1))
P222 = Target((2, 2, 2))


@dataclass(frozen=True)
class FormulaResult:
    """What a case predicts: ``equal`` (one target), ``bounds`` (two
    targets) or ``value`` (a number)."""

    kind: str
    provenance: str
    domain: str
    target: Target | None = None
    lower: Target | None = None
    upper: Target | None = None
    value: int | None = None

    def __post_init__(self):
        if self.kind not in ("equal", "bounds", "value"):
            raise ValueError(f"unknown formula kind {self.kind!r}")

    def __str__(self):
        if self.kind == "equal":
            return f"= {self.target}(G)"
        if self.kind == "bounds":
            return f"[{self.lower}(G), {self.upper}(G)]"
        return f"= {self.value}"

    def evaluate(self, g: Graph, cfg: SolverConfig | None = None) -> tuple[int | None, int | None]:
        """Solve the targets on g exactly; returns (low, high)."""
        if self.kind == "value":
            return self.value, self.value

        def val(t: Target):
            c = SolverConfig(secure=t.secure, node_budget=None if cfg is None else cfg.node_budget)
            return solve(g, WeightVector(t.w), c).value

        if self.kind == "equal":
            v = val(self.target)
            return v, v
        lo, hi = val(self.lower), val(self.upper)
        if lo is not None and hi is not None and lo > hi:
            raise AssertionError(f"bounds inverted: {lo} > {hi}")
        return lo, hi


def _equal(t, prov, dom="G without isolated vertices, H nontrivial"):
    return FormulaResult("equal", prov, dom, target=t)


def _bounds(lo, hi, prov, dom="G without isolated vertices, H nontrivial"):
    return FormulaResult("bounds", prov, dom, lower=lo, upper=hi)


# -- case dispatch ------------------------------------------------------------

def secure_domination_case(h: HClass) -> str:
    """Case label (i)..(vii) for the secure domination of G∘H."""
    if not h.is_nontrivial:
        raise CaseError("H must have at least two vertices")
    g, s = h.gamma, h.sec_dom
    if s < g:
        raise CaseError(f"γ^s_(1,0)(H)={s} < γ(H)={g}; no case applies")
    if (s == 1) != h.is_complete:
        raise CaseError("γ^s_(1,0)(H)=1 must coincide with H being complete")
    if s == 1:
        return "i"
    if g == 1:
        return "ii" if s == 2 else "iii"
    if g == 2:
        return "iv" if s == 2 else "v"
    if s == 3:
        return "vi"
    return "vii"


_SECDOM = {
    "i": lambda: _equal(S100, "secure domination of G∘H, case (i): H complete"),
    "ii": lambda: _equal(P210, "secure domination of G∘H, case (ii): γ^s(H)=2, γ(H)=1"),
    "iii": lambda: _equal(P211, "secure domination of G∘H, case (iii): γ^s(H)>=3, γ(H)=1"),
    "iv": lambda: _bounds(S110, P220, "secure domination of G∘H, case (iv): γ^s(H)=γ(H)=2"),
    "v": lambda: _equal(P221, "secure domination of G∘H, case (v): γ^s(H)>γ(H)=2"),
    "vi": lambda: _bounds(P221, P222, "secure domination of G∘H, case (vi): γ^s(H)=γ(H)=3"),
    "vii": lambda: _equal(P222, "secure domination of G∘H, case (vii): γ^s(H)>=4, γ(H)>=3"),
}


def classify_case_secure_domination(h: HClass) -> FormulaResult:
    return _SECDOM[secure_domination_case(h)]()


def classify_case_weak_roman(h: HClass) -> FormulaResult:
    """γ^s_(1,0,0)(G∘H) in terms of G.

    For noncomplete H with γ(H) >= 2 the weak Roman and secure domination
    numbers of G∘H coincide, so the secure domination case applies.
    """
    if not h.is_nontrivial:
        raise CaseError("H must have at least two vertices")
    if h.is_complete:
        return _equal(S100, "weak Roman domination of G∘H: H complete", "any G")
    if h.gamma == 1:
        return _equal(P210, "weak Roman domination of G∘H: H noncomplete, γ(H)=1")
    r = classify_case_secure_domination(h)
    return FormulaResult(r.kind, "weak Roman = secure domination on G∘H; " + r.provenance,
                         r.domain, r.target, r.lower, r.upper, r.value)


def secure_total_case(h: HClass) -> str:
    if not h.is_nontrivial:
        raise CaseError("H must have at least two vertices")
    if h.sec_tot is None:
        raise CaseError("secure total domination needs γ^s_(1,1)(H)")
    if h.sec_tot == 2:
        return "i"
    if h.gamma == 1:
        return "ii"
    if h.gamma == 2:
        return "iii"
    return "iv"


_SECTOT = {
    "i": lambda: _equal(S110, "secure total domination of G∘H, case (i): γ^s_(1,1)(H)=2"),
    "ii": lambda: _equal(S111, "secure total domination of G∘H, case (ii): γ(H)=1, γ^s_(1,1)(H)>=3"),
    "iii": lambda: _equal(P221, "secure total domination of G∘H, case (iii): γ(H)=2<γ^s_(1,1)(H)"),
    "iv": lambda: _equal(P222, "secure total domination of G∘H, case (iv): γ(H)>=3"),
}


def classify_case_secure_total(h: HClass) -> FormulaResult:
    return _SECTOT[secure_total_case(h)]()


# -- paths and cycles -------------------------------------------------------

def _ceil(a, b):
    return -(-a // b)


def _f221(n):
    return n - n // 7 + (1 if n % 7 in (1, 2) else 0)


def _f222_path(n):
    return n + (0, 1, 2, 1)[n % 4]


def _f211_path(n):
    return 2 * n // 3 + 1 if n % 3 == 0 else 2 * _ceil(n, 3)


def _f_mod11(n):
    return n - n // 11 + (1 if n % 11 in (1, 2, 5) else 0)


@dataclass(frozen=True)
class Formula:
    """A closed form on P_n or C_n.

    ``target`` is the parameter being computed. For product entries it is
    taken on ``G∘H`` and ``h_case`` names the H-class; otherwise it is a
    parameter of the path or cycle itself.
    """

    key: str
    family: str
    fn: Callable[[int], int] = field(compare=False)
    min_n: int
    target: Target
    citation: str
    text: str
    h_case: str | None = None
    external: bool = False

    def __call__(self, n: int) -> int:
        if n < self.min_n:
            raise DomainError(f"{self.family} formula {self.key!r} holds for n >= {self.min_n}, got n={n}",
                              self.min_n)
        return self.fn(n)

    @property
    def product_family(self) -> str | None:
        if self.h_case is None:
            return None
        return self.key.split(":")[0]


def _fm(key, family, fn, min_n, target, citation, text, h_case=None, external=False):
    return Formula(key, family, fn, min_n, target, citation, text, h_case, external)


SECDOM = Target((1, 0), True)
SECTOT = Target((1, 1), True)
WEAKR = Target((1, 0, 0), True)

PATH_FORMULAS: dict[str, Formula] = {f.key: f for f in [
    _fm("s100", "path", lambda n: _ceil(3 * n, 7), 6, S100,
        "weak Roman domination of paths (secure domination of P_n∘K_m)", "⌈3n/7⌉", external=True),
    _fm("s110", "path", lambda n: 2 * _ceil(n, 3), 4, S110,
        "secure (1,1,0)-domination of paths", "2⌈n/3⌉"),
    _fm("s111", "path", lambda n: _ceil(5 * (n - 2), 7) + 2, 4, S111,
        "total weak Roman domination of paths", "⌈5(n-2)/7⌉+2", external=True),
    _fm("210", "path", lambda n: 2 * _ceil(n, 3), 4, P210,
        "(2,1,0)-domination of paths", "2⌈n/3⌉", external=True),
    _fm("220", "path", lambda n: 2 * _ceil(n, 3), 4, P220,
        "(2,2,0)-domination of paths", "2⌈n/3⌉", external=True),
    _fm("211", "path", _f211_path, 4, P211,
        "(2,1,1)-domination of paths", "2n/3+1 if 3|n, else 2⌈n/3⌉"),
    _fm("221", "path", _f221, 4, P221,
        "(2,2,1)-domination of paths", "n-⌊n/7⌋ (+1 if n≡1,2 mod 7)", external=True),
    _fm("222", "path", _f222_path, 4, P222,
        "(2,2,2)-domination of paths", "n, n+1, n+2 for n≡0 / n≡1,3 / n≡2 (mod 4)", external=True),
    _fm("secdom:i", "path", lambda n: _ceil(3 * n, 7), 6, SECDOM,
        "secure domination of P_n∘H, H complete", "⌈3n/7⌉", "i", external=True),
    _fm("secdom:ii", "path", lambda n: 2 * _ceil(n, 3), 6, SECDOM,
        "secure domination of P_n∘H, γ^s(H)=2, γ(H)=1", "2⌈n/3⌉", "ii", external=True),
    _fm("secdom:iii", "path", _f211_path, 6, SECDOM,
        "secure domination of P_n∘H, γ^s(H)>=3, γ(H)=1", "2n/3+1 if 3|n, else 2⌈n/3⌉", "iii", external=True),
    _fm("secdom:iv", "path", lambda n: 2 * ((n + 2) // 3), 6, SECDOM,
        "secure domination of P_n∘H, γ^s(H)=γ(H)=2", "2⌊(n+2)/3⌋", "iv", external=True),
    _fm("secdom:v", "path", _f221, 6, SECDOM,
        "secure domination of P_n∘H, γ^s(H)>γ(H)=2", "n-⌊n/7⌋ (+1 if n≡1,2 mod 7)", "v"),
    _fm("secdom:vi", "path", _f_mod11, 6, SECDOM,
        "secure domination of P_n∘H, γ^s(H)=γ(H)=3", "n-⌊n/11⌋ (+1 if n≡1,2,5 mod 11)", "vi"),
    _fm("secdom:vii", "path", _f222_path, 6, SECDOM,
        "secure domination of P_n∘H, γ^s(H)>=4, γ(H)>=3", "n, n+1, n+2 by n mod 4", "vii"),
    _fm("weakroman", "path", lambda n: 2 * _ceil(n, 3), 3, WEAKR,
        "weak Roman domination of P_n∘H, H noncomplete with γ(H)=1", "2⌈n/3⌉", "γ=1", external=True),
    _fm("sectot:i", "path", lambda n: 2 * _ceil(n, 3), 4, SECTOT,
        "secure total domination of P_n∘H, γ^s_(1,1)(H)=2", "2⌈n/3⌉", "i"),
    _fm("sectot:ii", "path", lambda n: _ceil(5 * (n - 2), 7) + 2, 4, SECTOT,
        "secure total domination of P_n∘H, γ(H)=1, γ^s_(1,1)(H)>=3", "⌈5(n-2)/7⌉+2", "ii"),
    _fm("sectot:iii", "path", _f221, 4, SECTOT,
        "secure total domination of P_n∘H, γ(H)=2<γ^s_(1,1)(H)", "n-⌊n/7⌋ (+1 if n≡1,2 mod 7)", "iii"),
    _fm("sectot:iv", "path", _f222_path, 4, SECTOT,
        "secure total domination of P_n∘H, γ(H)>=3", "n, n+1, n+2 by n mod 4", "iv"),
]}

CYCLE_FORMULAS: dict[str, Formula] = {f.key: f for f in [
    _fm("s100", "cycle", lambda n: _ceil(3 * n, 7), 6, S100,
        "weak Roman domination of cycles (secure domination of C_n∘K_m)", "⌈3n/7⌉", external=True),
    _fm("s110", "cycle", lambda n: _ceil(2 * n, 3) if n in (4, 7) else 2 * _ceil(n, 3), 4, S110,
        "secure (1,1,0)-domination of cycles", "⌈2n/3⌉ if n=4,7, else 2⌈n/3⌉"),
    _fm("s111", "cycle", lambda n: _ceil(5 * n, 7), 4, S111,
        "total weak Roman domination of cycles", "⌈5n/7⌉", external=True),
    _fm("210", "cycle", lambda n: _ceil(2 * n, 3), 4, P210,
        "(2,1,0)-domination of cycles", "⌈2n/3⌉", external=True),
    _fm("220", "cycle", lambda n: 2 * _ceil(n, 3), 4, P220,
        "(2,2,0)-domination of cycles", "2⌈n/3⌉", external=True),
    _fm("211", "cycle", lambda n: _ceil(2 * n, 3), 4, P211,
        "(2,1,1)-domination of cycles", "⌈2n/3⌉"),
    _fm("221", "cycle", _f221, 4, P221,
        "(2,2,1)-domination of cycles", "n-⌊n/7⌋ (+1 if n≡1,2 mod 7)", external=True),
    _fm("222", "cycle", lambda n: n, 4, P222,
        "(2,2,2)-domination of cycles", "n", external=True),
    _fm("secdom:i", "cycle", lambda n: _ceil(3 * n, 7), 6, SECDOM,
        "secure domination of C_n∘H, H complete", "⌈3n/7⌉", "i", external=True),
    # the cycle statement merges the two γ(H)=1 cases
    _fm("secdom:ii", "cycle", lambda n: _ceil(2 * n, 3), 6, SECDOM,
        "secure domination of C_n∘H, γ^s(H)>=2, γ(H)=1", "⌈2n/3⌉", "ii", external=True),
    _fm("secdom:iii", "cycle", lambda n: _ceil(2 * n, 3), 6, SECDOM,
        "secure domination of C_n∘H, γ^s(H)>=2, γ(H)=1", "⌈2n/3⌉", "iii", external=True),
    _fm("secdom:iv", "cycle", lambda n: 2 * ((n + 2) // 3), 6, SECDOM,
        "secure domination of C_n∘H, γ^s(H)=γ(H)=2", "2⌊(n+2)/3⌋", "iv", external=True),
    _fm("secdom:v", "cycle", _f221, 6, SECDOM,
        "secure domination of C_n∘H, γ^s(H)>γ(H)=2", "n-⌊n/7⌋ (+1 if n≡1,2 mod 7)", "v"),
    _fm("secdom:vi", "cycle", _f_mod11, 6, SECDOM,
        "secure domination of C_n∘H, γ^s(H)=γ(H)=3", "n-⌊n/11⌋ (+1 if n≡1,2,5 mod 11)", "vi"),
    _fm("secdom:vii", "cycle", lambda n: n, 6, SECDOM,
        "secure domination of C_n∘H, γ^s(H)>=4, γ(H)>=3", "n", "vii"),
    _fm("weakroman", "cycle", lambda n: _ceil(2 * n, 3), 3, WEAKR,
        "weak Roman domination of C_n∘H, H noncomplete with γ(H)=1", "⌈2n/3⌉", "γ=1", external=True),
    _fm("sectot:i", "cycle", lambda n: _ceil(2 * n, 3) if n in (4, 7) else 2 * _ceil(n, 3), 4, SECTOT,
        "secure total domination of C_n∘H, γ^s_(1,1)(H)=2", "⌈2n/3⌉ if n=4,7, else 2⌈n/3⌉", "i"),
    _fm("sectot:ii", "cycle", lambda n: _ceil(5 * n, 7), 4, SECTOT,
        "secure total domination of C_n∘H, γ(H)=1, γ^s_(1,1)(H)>=3", "⌈5n/7⌉", "ii"),
    _fm("sectot:iii", "cycle", _f221, 4, SECTOT,
        "secure total domination of C_n∘H, γ(H)=2<γ^s_(1,1)(H)", "n-⌊n/7⌋ (+1 if n≡1,2 mod 7)", "iii"),
    _fm("sectot:iv", "cycle", lambda n: n, 4, SECTOT,
        "secure total domination of C_n∘H, γ(H)>=3", "n", "iv"),
]}


def _lookup(table: dict[str, Formula], family: str, param: str) -> Formula:
    try:
        return table[param]
    except KeyError:
        raise KeyError(f"no {family} formula named {param!r}; known: {', '.join(table)}") from None


def path_formula(param: str) -> Formula:
    return _lookup(PATH_FORMULAS, "path", param)


def cycle_formula(param: str) -> Formula:
    return _lookup(CYCLE_FORMULAS, "cycle", param)


def path_value(param: str, n: int) -> int:
    return path_formula(param)(n)


def cycle_value(param: str, n: int) -> int:
    return cycle_formula(param)(n)


# -- complete and complete multipartite graphs ----------------------------------

SHAPES = ("Kn", "K1m", "K2m", "K3m", "Knr")


def _shape_check(family, shape, n, r):
    if shape not in SHAPES:
        raise ValueError(f"unknown shape {shape!r}; expected one of {SHAPES}")
    if family == "secure-dom":
        if n < 4 or (shape == "Knr" and (r is None or r < 4)):
            raise DomainError("secure domination corollary holds for n, r >= 4", 4)
        return
    # weak Roman and secure total: n >= r >= 2
    rr = {"K2m": 2, "K3m": 3}.get(shape, r)
    if shape == "Knr" and rr is None:
        raise ValueError("shape Knr needs r")
    if n < 2 or (rr is not None and not (n >= rr >= 2)):
        raise DomainError(f"{family} corollary holds for n >= r >= 2", 2)


def multipartite_value(param: str, shape: str, h: HClass, n: int = 4, r: int | None = None) -> int:
    """Value of the product parameter on X∘H for X = K_n, K_{1,n-1},
    K_{2,n}, K_{3,n} or K_{n,r}.

    ``param`` is ``secure-dom``, ``weak-roman`` or ``secure-total``.
    """
    _shape_check(param, shape, n, r)
    if param == "secure-dom":
        g, s = h.gamma, h.sec_dom
        secure_domination_case(h)
        if shape == "Kn":
            if h.is_complete:
                return 1
            return 2 if (s > g == 1) or (s == g == 2) else 3
        if shape == "K1m":
            if s <= 2:
                return 2
            return 4 if (s >= 4 and g >= 3) else 3
        if shape == "K2m":
            if h.is_complete:
                return 2
            return 4 if (s >= 2 and g >= 2) else 3
        if shape == "K3m":
            return 3 if h.is_complete else 4
        return 4
    if param == "weak-roman":
        if h.is_complete or h.gamma != 1:
            raise CaseError("weak Roman corollary needs H noncomplete with γ(H)=1")
        if shape in ("Kn", "K1m"):
            return 2
        rr = {"K2m": 2, "K3m": 3}.get(shape, r)
        return 3 if rr == 2 else 4
    if param == "secure-total":
        secure_total_case(h)
        if shape == "Kn":
            return 2 if h.gamma == 1 else 3
        if shape == "K1m":
            if h.sec_tot == 2:
                return 2
            return 4 if h.gamma >= 3 else 3
        rr = {"K2m": 2, "K3m": 3}.get(shape, r)
        return 3 if (h.gamma == 1 and rr == 2) else 4
    raise ValueError(f"unknown product family {param!r}")


# -- fact table -------------------------------------------------------------

@dataclass(frozen=True)
class Fact:
    """One atomic parameter value.

    ``expr`` is a graph expression, possibly with ``{n}``/``{r}``
    placeholders whose ranges are ``domain`` (minimum values) and
    ``n >= r`` when ``ordered``. ``h_class`` restricts H for product facts
    (``lex(X,H)`` expressions) as a (γ(H), γ^s_(1,0)(H)) pair.
    """

    family: str
    expr: str
    w: tuple[int, ...]
    secure: bool
    value: int
    citation: str
    domain: tuple[tuple[str, int], ...] = ()
    ordered: bool = False
    h_class: tuple[int, int] | None = None
    external: bool = False

    def instantiate(self, **params) -> str:
        mins = dict(self.domain)
        for k, lo in mins.items():
            if k not in params:
                raise ValueError(f"fact {self.family} needs parameter {k}")
            if params[k] < lo:
                raise DomainError(f"{self.family}: {k} >= {lo} required", lo)
        if self.ordered and params["n"] < params["r"]:
            raise DomainError(f"{self.family}: n >= r required")
        return self.expr.format(**params)

    def sample_params(self, limit: int = 2) -> list[dict]:
        """A few in-domain parameter choices, smallest first."""
        mins = dict(self.domain)
        if not mins:
            return [{}]
        if "r" not in mins:
            return [{"n": mins["n"] + i} for i in range(limit)]
        out = []
        for dn in range(limit):
            for dr in range(limit):
                p = {"n": mins["n"] + dn, "r": mins["r"] + dr}
                if not self.ordered or p["n"] >= p["r"]:
                    out.append(p)
        return out


def _facts_for(family, expr, domain, items, citation, ordered=False):
    dom = tuple(domain.items())
    return [Fact(family, expr, w, sec, v, citation, dom, ordered) for (w, sec, v) in items]


W100, W110, W111 = (1, 0, 0), (1, 1, 0), (1, 1, 1)
W210, W211, W220, W221, W222 = (2, 1, 0), (2, 1, 1), (2, 2, 0), (2, 2, 1), (2, 2, 2)


def fact_table() -> list[Fact]:
    """Every atomic parameter value listed alongside the product results."""
    facts: list[Fact] = []
    c_sd = "facts behind the secure domination corollary for complete and complete bipartite G"
    facts += _facts_for("K_n", "complete:{n}", {"n": 4}, [
        (W100, True, 1), (W210, False, 2), (W211, False, 2), (W110, True, 2), (W220, False, 2),
        (W221, False, 3), (W222, False, 3)], c_sd)
    facts += _facts_for("K_{1,n-1}", "star:{n}", {"n": 4}, [
        (W100, True, 2), (W210, False, 2), (W110, True, 2), (W220, False, 2),
        (W211, False, 3), (W221, False, 3), (W222, False, 4)], c_sd)
    facts += _facts_for("K_{2,n}", "kbip:2,{n}", {"n": 4}, [
        (W100, True, 2), (W210, False, 3), (W211, False, 3), (W221, False, 4), (W222, False, 4)], c_sd)
    facts.append(Fact("K_{2,n}", "kbip:2,{n}", W220, False, 4,
                      "special case of the secure domination corollary when γ^s(H)=γ(H)=2",
                      (("n", 4),)))
    facts += _facts_for("K_{3,n}", "kbip:3,{n}", {"n": 4}, [
        (W100, True, 3), (W210, False, 4), (W211, False, 4), (W110, True, 4), (W220, False, 4),
        (W221, False, 4), (W222, False, 4)], c_sd)
    facts += _facts_for("K_{n,r}", "kbip:{n},{r}", {"n": 4, "r": 4}, [
        (W100, True, 4), (W210, False, 4), (W110, True, 4), (W220, False, 4), (W211, False, 4),
        (W221, False, 4), (W222, False, 4)], c_sd)

    c_wr = "facts behind the weak Roman corollary for complete and complete bipartite G"
    facts += _facts_for("K_n", "complete:{n}", {"n": 2}, [(W210, False, 2)], c_wr)
    facts += _facts_for("K_{1,n-1}", "star:{n}", {"n": 2}, [(W210, False, 2)], c_wr)
    facts += _facts_for("K_{n,2}", "kbip:{n},2", {"n": 2}, [(W210, False, 3)], c_wr)
    facts += _facts_for("K_{n,r}", "kbip:{n},{r}", {"n": 3, "r": 3}, [(W210, False, 4)], c_wr, ordered=True)

    c_st = "facts behind the secure total domination corollary for complete and complete bipartite G"
    facts += _facts_for("K_n", "complete:{n}", {"n": 2}, [
        (W110, True, 2), (W111, True, 2), (W221, False, 3), (W222, False, 3)], c_st)
    facts += _facts_for("K_{1,n-1}", "star:{n}", {"n": 2}, [
        (W110, True, 2), (W111, True, 3), (W221, False, 3), (W222, False, 4)], c_st)
    facts += _facts_for("K_{n,2}", "kbip:{n},2", {"n": 2}, [(W110, True, 3), (W111, True, 3)], c_st)
    facts += _facts_for("K_{n,r}", "kbip:{n},{r}", {"n": 3, "r": 3}, [
        (W110, True, 4), (W111, True, 4), (W221, False, 4), (W222, False, 4)], c_st, ordered=True)

    c_f1 = "figure of a graph whose secure domination product sits strictly between its bounds"
    facts += [
        Fact("fig1", "fig1", W110, True, 6, c_f1),
        Fact("fig1", "fig1", W220, False, 8, c_f1),
        Fact("fig1 ∪ C_4", "union(fig1,cycle:4)", W110, True, 9, c_f1),
        Fact("fig1 ∪ C_4", "union(fig1,cycle:4)", W220, False, 12, c_f1),
        Fact("C_4", "cycle:4", W110, True, 3, c_f1),
        Fact("C_4", "cycle:4", W220, False, 4, c_f1),
        Fact("fig1∘H", "lex(fig1,H)", (1, 0), True, 6, c_f1, h_class=(2, 2)),
        Fact("(fig1 ∪ C_4)∘H", "lex(union(fig1,cycle:4),H)", (1, 0), True, 10, c_f1, h_class=(2, 2)),
        Fact("C_4∘H", "lex(cycle:4,H)", (1, 0), True, 4, c_f1, h_class=(2, 2)),
    ]
    c_f2 = "figure of the graphs G_1, G_2, G_3 for H with γ^s(H)=γ(H)=3"
    facts += [
        Fact("G_1", "fig2_1", W222, False, 6, c_f2),
        Fact("G_2", "fig2_2", W221, False, 6, c_f2),
        Fact("G_3", "fig2_3", W221, False, 11, c_f2),
        Fact("G_3", "fig2_3", W222, False, 14, c_f2),
        Fact("G_1∘H", "lex(fig2_1,H)", (1, 0), True, 6, c_f2, h_class=(3, 3)),
        Fact("G_2∘H", "lex(fig2_2,H)", (1, 0), True, 6, c_f2, h_class=(3, 3)),
        Fact("G_3∘H", "lex(fig2_3,H)", (1, 0), True, 12, c_f2, h_class=(3, 3)),
    ]
    return facts


@dataclass(frozen=True)
class Erratum:
    """A point inside a stated domain where the exact value differs from the
    stated one. Kept next to the entry instead of narrowing the domain."""

    where: str
    w: tuple[int, ...]
    secure: bool
    stated: int
    exact: int
    note: str


# Both come from n >= r >= 2 admitting K_2 = K_{1,1}.
ERRATA: tuple[Erratum, ...] = (
    Erratum("complete:2", W222, False, 3, 4,
            "K_2: each vertex sees only the other, so both labels must be 2"),
    Erratum("star:2", W111, True, 3, 2,
            "K_{1,1} = K_2: the labeling (1,1) is total and has no zero vertex"),
)


def fact_erratum(expr: str, w: Sequence[int], secure: bool) -> Erratum | None:
    for e in ERRATA:
        if e.where == expr and e.w == tuple(w) and e.secure == secure:
            return e
    return None


def multipartite_erratum(param: str, shape: str, h: HClass, n: int, r: int | None = None) -> str | None:
    """Why the corollary value is off at this point, or None.

    The secure total corollary inherits the two K_2 errata: K_2∘H with
    γ(H) >= 3 needs γ_(2,2,2)(K_2) = 4, and K_{1,1}∘H with γ(H) = 1 and
    γ^s_(1,1)(H) >= 3 needs γ^s_(1,1,1)(K_2) = 2.
    """
    if param != "secure-total" or n != 2:
        return None
    if shape == "Kn" and h.gamma >= 3:
        return "K_2∘H with γ(H) >= 3 has value γ_(2,2,2)(K_2) = 4"
    if shape == "K1m" and h.gamma == 1 and h.sec_tot is not None and h.sec_tot >= 3:
        return "K_{1,1}∘H with γ(H) = 1, γ^s_(1,1)(H) >= 3 has value γ^s_(1,1,1)(K_2) = 2"
    return None


@dataclass(frozen=True)
class ProductErratum:
    """A product G∘H inside a case's hypotheses whose exact value differs
    from the case's prediction."""

    g: str
    h: str
    w: tuple[int, ...]
    stated: int
    exact: int
    note: str


_V_NOTE = ("case (v): a copy carrying weight 1 needs only one unit from neighbouring copies, "
           "since a move inside the copy keeps it dominated; the lower bound argument asks for two")
_VII_NOTE = ("case (vii): a copy carrying weight 2 needs only one unit from neighbouring copies; "
             "the lower bound argument asks for two")

# Found by the verification suites and confirmed by brute-force enumeration.
PRODUCT_ERRATA: tuple[ProductErratum, ...] = (
    ProductErratum("path:3", "path:8", (1, 0), 4, 3, _VII_NOTE),
    ProductErratum("star:4", "path:8", (1, 0), 4, 3, _VII_NOTE),
    ProductErratum("path:2", "path:8", (1, 0), 4, 3, _VII_NOTE),
    ProductErratum("path:6", "path:8", (1, 0), 8, 6, _VII_NOTE),
    ProductErratum("path:7", "path:8", (1, 0), 8, 7, _VII_NOTE),
    ProductErratum("path:6", "path:5", (1, 0), 6, 5, _V_NOTE),
    ProductErratum("path:8", "path:5", (1, 0), 8, 7, _V_NOTE),
    ProductErratum("cycle:6", "path:5", (1, 0), 6, 5, _V_NOTE),
    ProductErratum("cycle:8", "path:5", (1, 0), 8, 6, _V_NOTE),
    # inherited by the complete-graph corollary, whose K_n line rests on case (v)
    ProductErratum("complete:4", "path:5", (1, 0), 3, 2, _V_NOTE),
)


def product_erratum(g_expr: str, h_expr: str, w: Sequence[int]) -> ProductErratum | None:
    for e in PRODUCT_ERRATA:
        if (e.g, e.h, e.w) == (g_expr, h_expr, tuple(w)):
            return e
    return None


# -- export -----------------------------------------------------------------

COLUMNS = ("family", "parameters", "weight-vector", "secure-flag", "value-or-bounds", "citation")


def _wstr(w):
    return "(" + ",".join(map(str, w)) + ")"


def catalog_rows() -> list[dict]:
    """The whole catalog flattened into export rows."""
    rows = []
    for table in (PATH_FORMULAS, CYCLE_FORMULAS):
        for f in table.values():
            fam = ("P_n" if f.family == "path" else "C_n") + ("∘H" if f.h_case else "")
            params = f"n>={f.min_n}" + (f"; H case {f.h_case}" if f.h_case else "")
            rows.append({
                "family": fam, "parameters": params, "weight-vector": _wstr(f.target.w),
                "secure-flag": f.target.secure, "value-or-bounds": f.text,
                "citation": f.citation + (" [sourced: external]" if f.external else ""),
            })
    for case in _SECDOM:
        r = _SECDOM[case]()
        rows.append({"family": "G∘H", "parameters": f"H case {case}", "weight-vector": "(1,0)",
                     "secure-flag": True, "value-or-bounds": str(r), "citation": r.provenance})
    for case in _SECTOT:
        r = _SECTOT[case]()
        rows.append({"family": "G∘H", "parameters": f"H case {case}", "weight-vector": "(1,1)",
                     "secure-flag": True, "value-or-bounds": str(r), "citation": r.provenance})
    rows.append({"family": "G∘H", "parameters": "H noncomplete, γ(H)=1", "weight-vector": "(1,0,0)",
                 "secure-flag": True, "value-or-bounds": str(_equal(P210, "")),
                 "citation": "weak Roman domination of G∘H"})
    for f in fact_table():
        params = ", ".join(f"{k}>={v}" for k, v in f.domain)
        if f.ordered:
            params += ", n>=r"
        if f.h_class:
            params += (", " if params else "") + f"γ(H)={f.h_class[0]}, γ^s(H)={f.h_class[1]}"
        rows.append({"family": f.family, "parameters": params, "weight-vector": _wstr(f.w),
                     "secure-flag": f.secure, "value-or-bounds": str(f.value),
                     "citation": f.citation + (" [sourced: external]" if f.external else "")})
    return rows


def export_csv(rows: Iterable[dict] | None = None) -> str:
    buf = io.StringIO()
    wr = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    wr.writeheader()
    for r in rows if rows is not None else catalog_rows():
        wr.writerow(r)
    return buf.getvalue()


def export_json(rows: Iterable[dict] | None = None) -> str:
    return json.dumps(list(rows if rows is not None else catalog_rows()), ensure_ascii=False, indent=1)
