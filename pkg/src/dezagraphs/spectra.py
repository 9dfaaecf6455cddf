"""Adjacency spectra via Householder tridiagonalization and implicit QL."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError

MERGE_TOL = 1e-8
CHECK_TOL = 1e-6


def tridiagonalize(matrix) -> tuple[np.ndarray, np.ndarray]:
    """Reduce a symmetric matrix to tridiagonal form by Householder reflections.

    Returns ``(diag, off)`` with ``off[i]`` coupling rows i and i+1; ``off``
    has length n and ``off[n-1] == 0``.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    off = np.zeros(n)
    for k in range(n - 2):
        x = a[k + 1 :, k].copy()
        norm = np.linalg.norm(x)
        if norm == 0.0:
            continue
        alpha = -math.copysign(norm, x[0])
        v = x
        v[0] -= alpha
        vnorm = np.linalg.norm(v)
        if vnorm == 0.0:
            continue
        v /= vnorm
        sub = a[k + 1 :, k + 1 :]
        w = sub @ v
        vw = float(v @ w)
        sub -= 2.0 * (np.outer(v, w) + np.outer(w, v)) - 4.0 * vw * np.outer(v, v)
        a[k + 1 :, k] = 0.0
        a[k, k + 1 :] = 0.0
        a[k + 1, k] = a[k, k + 1] = alpha
    diag = np.diag(a).copy()
    if n > 1:
        off[: n - 1] = np.diag(a, 1)
    return diag, off


def tridiagonal_eigenvalues(diag, off, max_iter: int = 60) -> np.ndarray:
    """Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL."""
    d = np.array(diag, dtype=float)
    e = np.array(off, dtype=float)
    n = d.size
    eps = np.finfo(float).eps
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                raise ArithmeticError("QL iteration did not converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def symmetric_eigenvalues(matrix) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, sorted descending."""
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if a.shape[0] == 0:
        return np.zeros(0)
    diag, off = tridiagonalize(a)
    return np.sort(tridiagonal_eigenvalues(diag, off))[::-1]


@dataclass(frozen=True)
class Eigenvalue:
    value: float
    multiplicity: int
    is_integer: bool


@dataclass(frozen=True)
class Spectrum:
    entries: tuple[Eigenvalue, ...]

    @property
    def n(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def values(self) -> list[float]:
        """Expanded eigenvalue list, descending."""
        return [e.value for e in self.entries for _ in range(e.multiplicity)]

    def distinct(self) -> list[float]:
        return [e.value for e in self.entries]

    def as_pairs(self) -> list[tuple[float, int]]:
        return [(e.value, e.multiplicity) for e in self.entries]

    def to_json(self) -> list[dict]:
        return [
            {"value": int(e.value) if e.is_integer else e.value, "multiplicity": e.multiplicity, "is_integer": e.is_integer}
            for e in self.entries
        ]

    def matches(self, other: "Spectrum", tol: float = CHECK_TOL) -> bool:
        a, b = self.values(), other.values()
        return len(a) == len(b) and all(abs(x - y) <= tol for x, y in zip(a, b))


def spectrum_from_values(values, tol: float = MERGE_TOL) -> Spectrum:
    """Merge a list of eigenvalues into a descending multiplicity table.

    Values are grouped first; a group within ``tol`` of an integer is
    snapped to it.
    """
    vals = sorted((float(v) for v in values), reverse=True)
    groups: list[list[float]] = []
    for v in vals:
        if groups and groups[-1][0] - v <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    entries = []
    for grp in groups:
        mean = sum(grp) / len(grp)
        nearest = round(mean)
        is_int = abs(mean - nearest) <= tol
        entries.append(Eigenvalue(float(nearest) if is_int else mean, len(grp), is_int))
    return Spectrum(tuple(entries))


def spectrum(g: Graph) -> Spectrum:
    return spectrum_from_values(symmetric_eigenvalues(g.adjacency_matrix()))


def children_spectra(report, spec: Spectrum) -> tuple[Spectrum, Spectrum]:
    """Spectra of the two Deza children computed from the parent spectrum.

    Each non-principal eigenvalue ``theta`` of the parent gives
    ``(k - b - theta**2) / (b - a)`` in the a-child and
    ``(k - a - theta**2) / (a - b)`` in the b-child; the principal
    eigenvalues are ``alpha`` and ``beta``.
    """
    n, k, b, a = report.n, report.k, report.b, report.a
    if b is None or a is None or b == a:
        raise ValueError("children spectra need two distinct common-neighbour values")
    vals = spec.values()
    if len(vals) != n:
        raise ValueError("spectrum size does not match the report")
    idx = min(range(n), key=lambda i: abs(vals[i] - k))
    if abs(vals[idx] - k) > CHECK_TOL:
        raise ValueError(f"spectrum has no principal eigenvalue {k}")
    rest = vals[:idx] + vals[idx + 1 :]
    alpha = (b * (n - 1) - k * (k - 1)) / (b - a)
    beta = (a * (n - 1) - k * (k - 1)) / (a - b)
    spec_a = spectrum_from_values([alpha] + [(k - b - t * t) / (b - a) for t in rest])
    spec_b = spectrum_from_values([beta] + [(k - a - t * t) / (a - b) for t in rest])
    return spec_a, spec_b


def switching_spectrum_check(g: Graph, switched: Graph, tol: float = CHECK_TOL) -> bool:
    """True iff both graphs have the same multiset of squared eigenvalues."""
    if g.n != switched.n:
        raise GraphError("graphs must have the same vertex count")
    sq1 = np.sort(symmetric_eigenvalues(g.adjacency_matrix()) ** 2)
    sq2 = np.sort(symmetric_eigenvalues(switched.adjacency_matrix()) ** 2)
    return bool(np.all(np.abs(sq1 - sq2) <= tol))
