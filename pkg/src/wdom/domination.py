"""Weight vectors, labelings and the (secure) w-domination checks.

A labeling f assigns each vertex a label in ``{0, ..., l}``. It is
w-dominating when every vertex v with ``f(v) = i`` sees a neighborhood sum
of at least ``w[i]``. A zero vertex v is defended by a positive neighbor u
when moving one unit from u to v keeps the labeling w-dominating; the
labeling is secure when every zero vertex has a defender.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph

__all__ = [
    "WeightVector",
    "Labeling",
    "LabelingError",
    "SecurityCertificate",
    "neighborhood_sum",
    "is_w_dominating",
    "move_labeling",
    "defender_set",
    "is_secure_w_dominating",
    "weight",
    "parse_weight_vector",
    "parse_labeling",
    "format_labeling",
]


class LabelingError(ValueError):
    """Bad weight vector, bad labeling, or an illegal move."""


@dataclass(frozen=True)
class WeightVector:
    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if len(entries) < 2:
            raise LabelingError("weight vector needs at least two entries (l >= 1)")
        if entries[0] < 1:
            raise LabelingError(f"w_0 must be >= 1, got {entries[0]}")
        if any(e < 0 for e in entries):
            raise LabelingError("weight vector entries must be nonnegative")
        object.__setattr__(self, "entries", entries)

    @property
    def l(self) -> int:
        return len(self.entries) - 1

    @property
    def monotone(self) -> bool:
        e = self.entries
        return all(e[i] >= e[i + 1] for i in range(len(e) - 1))

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class Labeling:
    values: tuple[int, ...]
    w: WeightVector

    def __init__(self, values: Iterable[int], w: WeightVector | Sequence[int]):
        if not isinstance(w, WeightVector):
            w = WeightVector(w)
        values = tuple(int(x) for x in values)
        bad = [x for x in values if not 0 <= x <= w.l]
        if bad:
            raise LabelingError(f"labels {bad} outside alphabet 0..{w.l}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "w", w)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __len__(self):
        return len(self.values)

    @property
    def weight(self) -> int:
        return sum(self.values)

    def level_set(self, i: int) -> list[int]:
        return [v for v, x in enumerate(self.values) if x == i]

    def rebind(self, w: WeightVector | Sequence[int]) -> "Labeling":
        """Reinterpret the same values against another weight vector."""
        return Labeling(self.values, w)

    def __str__(self):
        return format_labeling(self)


@dataclass
class SecurityCertificate:
    """One recorded defender per zero vertex; ``None`` marks an undefended one."""

    defenders: dict[int, int | None] = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return all(u is not None for u in self.defenders.values())


def _check_size(g: Graph, f: Labeling):
    if len(f) != g.n:
        raise LabelingError(f"labeling has {len(f)} values for a graph with {g.n} vertices")


def neighborhood_sum(g: Graph, f: Labeling, v: int) -> int:
    return sum(f.values[u] for u in g.adjacency[v])


def is_w_dominating(g: Graph, w: WeightVector, f: Labeling) -> bool:
    if f.w != w:
        raise LabelingError(f"labeling bound to {f.w}, checked against {w}")
    _check_size(g, f)
    vals = f.values
    return all(sum(vals[u] for u in g.adjacency[v]) >= w.entries[vals[v]] for v in range(g.n))


def move_labeling(g: Graph, f: Labeling, u: int, v: int) -> Labeling:
    """f_{u->v}: v receives 1, u gives up one unit."""
    if not g.has_edge(u, v):
        raise LabelingError(f"move needs adjacent vertices, ({u},{v}) is not an edge")
    if f.values[v] != 0:
        raise LabelingError(f"move target {v} has label {f.values[v]}, expected 0")
    if f.values[u] <= 0:
        raise LabelingError(f"move source {u} has label 0")
    vals = list(f.values)
    vals[v] = 1
    vals[u] -= 1
    return Labeling(vals, f.w)


def defender_set(g: Graph, w: WeightVector, f: Labeling, v: int) -> set[int]:
    """Positive neighbors u of the zero vertex v such that f_{u->v} is
    w-dominating."""
    if f.values[v] != 0:
        raise LabelingError(f"vertex {v} has label {f.values[v]}, defenders need label 0")
    return {u for u in g.adjacency[v]
            if f.values[u] > 0 and is_w_dominating(g, w, move_labeling(g, f, u, v))}


def is_secure_w_dominating(g: Graph, w: WeightVector, f: Labeling) -> tuple[bool, SecurityCertificate]:
    cert = SecurityCertificate()
    if not is_w_dominating(g, w, f):
        return False, cert
    ok = True
    for v in range(g.n):
        if f.values[v] != 0:
            continue
        d = defender_set(g, w, f, v)
        cert.defenders[v] = min(d) if d else None
        ok = ok and bool(d)
    return ok, cert


def weight(f: Labeling) -> int:
    return f.weight


def parse_weight_vector(text: str) -> WeightVector:
    try:
        return WeightVector(int(t) for t in text.strip().strip("()").split(","))
    except ValueError as exc:
        raise LabelingError(f"malformed weight vector {text!r}: {exc}") from None


def parse_labeling(text: str, w: WeightVector) -> Labeling:
    try:
        return Labeling((int(t) for t in text.split(",")), w)
    except ValueError as exc:
        raise LabelingError(f"malformed labeling {text!r}: {exc}") from None


def format_labeling(f: Labeling | Sequence[int]) -> str:
    vals = f.values if isinstance(f, Labeling) else f
    return ",".join(map(str, vals))
