"""Deza-graph recognition and the quantities derived from a pair census."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .graph import Graph, GraphError, _bits, complement, diameter

NOT_REGULAR = "NotRegular"
COMPLETE = "Complete"
EMPTY = "Empty"
STRONGLY_REGULAR = "StronglyRegular"
DEZA = "Deza"
OTHER = "Other"


@dataclass(frozen=True)
class PairCensus:
    """Common-neighbour counts over all unordered vertex pairs."""

    adjacent: dict[int, tuple[int, int]]
    nonadjacent: dict[int, tuple[int, int]]

    @property
    def values(self) -> set[int]:
        return set(self.adjacent) | set(self.nonadjacent)

    def witness(self, value: int) -> tuple[int, int]:
        return self.adjacent.get(value) or self.nonadjacent[value]


def pair_census(g: Graph) -> PairCensus:
    adj: dict[int, tuple[int, int]] = {}
    non: dict[int, tuple[int, int]] = {}
    rows = g.rows
    for u in range(g.n):
        ru = rows[u]
        for v in range(u + 1, g.n):
            c = (ru & rows[v]).bit_count()
            target = adj if ru >> v & 1 else non
            if c not in target:
                target[c] = (u, v)
    return PairCensus(adj, non)


@dataclass(frozen=True)
class DezaReport:
    n: int
    k: int | None
    kind: str
    b: int | None = None
    a: int | None = None
    alpha: int | None = None
    beta: int | None = None
    strictly_deza: bool = False
    edge_regular: bool = False
    coedge_regular: bool = False
    lam: int | None = None
    mu: int | None = None
    diameter: float = math.inf
    witnesses: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def params(self) -> tuple[int, int, int, int] | None:
        if self.b is None:
            return None
        return (self.n, self.k, self.b, self.a)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "kind": self.kind,
            "b": self.b,
            "a": self.a,
            "alpha": self.alpha,
            "beta": self.beta,
            "strictly_deza": self.strictly_deza,
            "edge_regular": self.edge_regular,
            "coedge_regular": self.coedge_regular,
            "lambda": self.lam,
            "mu": self.mu,
            "diameter": None if self.diameter == math.inf else int(self.diameter),
            "witnesses": {str(v): list(p) for v, p in sorted(self.witnesses.items())},
        }


def alpha_beta(n: int, k: int, b: int, a: int) -> tuple[int, int]:
    """Per-vertex numbers of a-vertices and b-vertices."""
    if b == a:
        raise ValueError("alpha and beta are undefined when b == a")
    if b < a:
        raise ValueError("expected b > a")
    alpha = Fraction(b * (n - 1) - k * (k - 1), b - a)
    beta = Fraction(k * (k - 1) - a * (n - 1), b - a)
    if alpha.denominator != 1 or beta.denominator != 1 or alpha < 0 or beta < 0:
        raise ValueError(f"inconsistent parameters ({n},{k},{b},{a}): alpha={alpha}, beta={beta}")
    return int(alpha), int(beta)


def classify(g: Graph) -> DezaReport:
    if g.n < 2:
        raise GraphError("classification needs at least two vertices")
    n = g.n
    k = g.regular_valency()
    if k is None:
        return DezaReport(n, None, NOT_REGULAR, diameter=diameter(g))
    census = pair_census(g)
    witnesses = {v: census.witness(v) for v in sorted(census.values)}
    diam = diameter(g)
    lam = next(iter(census.adjacent)) if len(census.adjacent) == 1 else None
    mu = next(iter(census.nonadjacent)) if len(census.nonadjacent) == 1 else None
    common = dict(n=n, k=k, diameter=diam, witnesses=witnesses, lam=lam, mu=mu,
                  edge_regular=lam is not None, coedge_regular=mu is not None)
    if k == 0:
        return DezaReport(kind=EMPTY, **common)
    if k == n - 1:
        return DezaReport(kind=COMPLETE, **common)
    values = sorted(census.values)
    if lam is not None and mu is not None:
        b, a = max(lam, mu), min(lam, mu)
        extra = {}
        if b > a:
            al, be = alpha_beta(n, k, b, a)
            extra = dict(b=b, a=a, alpha=al, beta=be)
        return DezaReport(kind=STRONGLY_REGULAR, **common, **extra)
    if len(values) == 2:
        a, b = values
        al, be = alpha_beta(n, k, b, a)
        return DezaReport(kind=DEZA, b=b, a=a, alpha=al, beta=be, strictly_deza=diam == 2, **common)
    return DezaReport(kind=OTHER, **common)


@dataclass(frozen=True)
class DezaChildren:
    child_a: Graph
    child_b: Graph


def children(g: Graph, report: DezaReport) -> DezaChildren:
    """The graphs of a-pairs and b-pairs, checked against the matrix identity."""
    if report.b is None or report.a is None or report.b == report.a:
        raise ValueError("children need two distinct common-neighbour values")
    a, b, k = report.a, report.b, report.k
    n = g.n
    rows_a = [0] * n
    rows_b = [0] * n
    for u in range(n):
        ru = g.rows[u]
        for v in range(u + 1, n):
            c = (ru & g.rows[v]).bit_count()
            if c == b:
                rows_b[u] |= 1 << v
                rows_b[v] |= 1 << u
            elif c == a:
                rows_a[u] |= 1 << v
                rows_a[v] |= 1 << u
            else:
                raise ValueError(f"pair ({u},{v}) has {c} common neighbours, not {a} or {b}")
    child_a = Graph(n, tuple(rows_a))
    child_b = Graph(n, tuple(rows_b))
    m = g.adjacency_matrix()
    ma, mb = child_a.adjacency_matrix(), child_b.adjacency_matrix()
    eye = np.eye(n, dtype=np.int64)
    if not np.array_equal(ma + mb + eye, np.ones((n, n), dtype=np.int64)):
        raise ArithmeticError("children do not partition the vertex pairs")
    if not np.array_equal(m @ m, a * ma + b * mb + k * eye):
        raise ArithmeticError("M^2 != aA + bB + kI")
    return DezaChildren(child_a, child_b)


@dataclass(frozen=True)
class ComplementVerdict:
    is_deza: bool
    situations: tuple[bool, bool, bool, bool]


def complement_is_deza(g: Graph, report: DezaReport) -> ComplementVerdict:
    """Decide whether the complement of a non-strongly-regular Deza graph is Deza.

    Situations, in order: non-adjacent a-pair, non-adjacent b-pair, adjacent
    a-pair, adjacent b-pair.  The complement is Deza iff ``b == a + 2`` and
    situations 1 and 4 do not both occur.
    """
    if report.kind != DEZA:
        raise ValueError("complement criterion applies to Deza graphs that are not strongly regular")
    census = pair_census(g)
    a, b = report.a, report.b
    sits = (a in census.nonadjacent, b in census.nonadjacent, a in census.adjacent, b in census.adjacent)
    return ComplementVerdict(b == a + 2 and not (sits[0] and sits[3]), sits)


def complement_classification(g: Graph) -> DezaReport:
    return classify(complement(g))


@dataclass(frozen=True)
class DivisibleDesign:
    m: int
    class_size: int
    lambda1: int
    lambda2: int
    classes: tuple[tuple[int, ...], ...]


def divisible_design_partitions(g: Graph, report: DezaReport) -> list[DivisibleDesign]:
    """Every value whose pair relation is an equivalence with equal classes."""
    if report.b is None or report.a is None or report.b == report.a:
        return []
    n = g.n
    found = []
    for within, across in ((report.b, report.a), (report.a, report.b)):
        rel = [1 << u for u in range(n)]
        for u in range(n):
            for v in range(u + 1, n):
                if (g.rows[u] & g.rows[v]).bit_count() == within:
                    rel[u] |= 1 << v
                    rel[v] |= 1 << u
        classes = []
        ok = True
        assigned = 0
        for u in range(n):
            if assigned >> u & 1:
                continue
            cls = rel[u]
            if any(rel[v] != cls for v in _bits(cls)):
                ok = False
                break
            classes.append(tuple(_bits(cls)))
            assigned |= cls
        if not ok or len({len(c) for c in classes}) != 1 or len(classes) < 2:
            continue
        found.append(DivisibleDesign(len(classes), len(classes[0]), within, across, tuple(classes)))
    return found


def is_divisible_design(g: Graph, report: DezaReport) -> DivisibleDesign | None:
    found = divisible_design_partitions(g, report)
    return found[0] if found else None
