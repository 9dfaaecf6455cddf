"""Finite simple graphs stored as packed bit rows.

Row ``rows[v]`` is an int whose bit ``u`` is set iff ``u ~ v``.  Graphs are
immutable; every operation returns a new value.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

import numpy as np

MAX_VERTICES = 4096

#: Returned by :func:`diameter` for disconnected graphs.
INFINITE = math.inf


class GraphError(ValueError):
    pass


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, row in enumerate(self.rows):
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.rows[v]) if u < v]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def regular_valency(self) -> int | None:
        """The common degree, or None if the graph is not regular."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def adjacency_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            m[u, v] = m[v, u] = 1
        return m

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        m = np.asarray(matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise GraphError("adjacency matrix must be square")
        rows = []
        for i in range(m.shape[0]):
            row = 0
            for j in np.flatnonzero(m[i]):
                row |= 1 << int(j)
            rows.append(row)
        return cls(m.shape[0], tuple(rows))


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection on 0..n-1, given by its image list."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(len(self.image))):
            raise GraphError("image is not a bijection on 0..n-1")

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> "VertexPermutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "VertexPermutation":
        image = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            for i, x in enumerate(cycle):
                if not 0 <= x < n or x in seen:
                    raise GraphError(f"bad cycle entry {x}")
                seen.add(x)
                image[x] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(image))

    def __call__(self, v: int) -> int:
        return self.image[v]

    def compose(self, other: "VertexPermutation") -> "VertexPermutation":
        """``self ∘ other``: apply ``other`` first."""
        return VertexPermutation(tuple(self.image[x] for x in other.image))

    def inverse(self) -> "VertexPermutation":
        inv = [0] * self.n
        for x, y in enumerate(self.image):
            inv[y] = x
        return VertexPermutation(tuple(inv))

    def is_involution(self) -> bool:
        return all(self.image[y] == x for x, y in enumerate(self.image))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.image))

    def fixed_points(self) -> list[int]:
        return [x for x, y in enumerate(self.image) if x == y]

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest element."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start] or self.image[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            x = self.image[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.image[x]
            out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    @classmethod
    def parse(cls, n: int, text: str) -> "VertexPermutation":
        """Parse cycle notation such as ``"(0 3)(1 2)"``; fixed points omitted."""
        text = text.strip()
        cycles = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            if text[pos] != "(":
                raise GraphError(f"malformed cycle notation: {text!r}")
            end = text.find(")", pos)
            if end < 0:
                raise GraphError(f"unclosed cycle in {text!r}")
            body = text[pos + 1 : end].replace(",", " ").split()
            try:
                cycles.append([int(tok) for tok in body])
            except ValueError as exc:
                raise GraphError(f"malformed cycle notation: {text!r}") from exc
            pos = end + 1
        return cls.from_cycles(n, [c for c in cycles if c])


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(parts: int, size: int) -> Graph:
    n = parts * size
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if u // size != v // size])


def matching(m: int) -> Graph:
    """``mK2``: vertices 2i and 2i+1 joined."""
    return from_edges(2 * m, [(2 * i, 2 * i + 1) for i in range(m)])


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    if u == v:
        raise GraphError("common neighbourhood needs two distinct vertices")
    return set(_bits(g.rows[u] & g.rows[v]))


def common_neighbor_count(g: Graph, u: int, v: int) -> int:
    return (g.rows[u] & g.rows[v]).bit_count()


def distances_from(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INFINITE] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~seen
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def diameter(g: Graph) -> float:
    """Largest BFS distance; :data:`INFINITE` when disconnected."""
    best = 0
    for v in range(g.n):
        ecc = max(distances_from(g, v))
        if ecc == INFINITE:
            return INFINITE
        best = max(best, ecc)
    return best


def is_connected(g: Graph) -> bool:
    return INFINITE not in distances_from(g, 0)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.rows)))


def lexicographic_product(g1: Graph, g2: Graph) -> Graph:
    """``g1[g2]`` on vertices ``i*n2 + j``.

    ``(u1,u2) ~ (v1,v2)`` iff ``u1 ~ v1`` in g1, or ``u1 == v1`` and ``u2 ~ v2``
    in g2.  (Some printed statements of this rule read ``u1 ~ u2`` in the first
    clause; that is a typo for ``u1 ~ v1``.)
    """
    n2 = g2.n
    block = (1 << n2) - 1
    rows = []
    for i in range(g1.n):
        outer = 0
        for j in _bits(g1.rows[i]):
            outer |= block << (j * n2)
        for j in range(n2):
            rows.append(outer | (g2.rows[j] << (i * n2)))
    return Graph(g1.n * n2, tuple(rows))


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    verts = sorted(set(vs))
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in _bits(g.rows[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(verts), tuple(rows))


def relabel(g: Graph, perm: VertexPermutation) -> Graph:
    """Graph in which ``perm(u) ~ perm(v)`` iff ``u ~ v`` in g."""
    if perm.n != g.n:
        raise GraphError("permutation size differs from vertex count")
    rows = [0] * g.n
    for u, v in g.edges():
        a, b = perm(u), perm(v)
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(g.n, tuple(rows))


def is_automorphism(g: Graph, perm: VertexPermutation) -> bool:
    return perm.n == g.n and relabel(g, perm) == g


def group_elements(group_orders: Sequence[int]) -> list[tuple[int, ...]]:
    """Elements of Z_{n1} x ... x Z_{nm}, last factor varying fastest."""
    return list(product(*(range(m) for m in group_orders)))


def element_index(group_orders: Sequence[int], element: Sequence[int]) -> int:
    idx = 0
    for m, x in zip(group_orders, element):
        idx = idx * m + x % m
    return idx


def _normalize(group_orders: Sequence[int], element) -> tuple[int, ...]:
    if isinstance(element, int):
        element = (element,)
    if len(element) != len(group_orders):
        raise GraphError(f"element {element} does not match group {tuple(group_orders)}")
    return tuple(x % m for m, x in zip(group_orders, element))


def cayley_graph(group_orders: Sequence[int], connection: Iterable) -> Graph:
    """Cayley graph of an abelian group given by cyclic factor orders.

    Elements of ``connection`` are tuples (or plain ints for a cyclic group).
    """
    orders = tuple(group_orders)
    if not orders or any(m < 1 for m in orders):
        raise GraphError("group orders must be positive")
    conn = {_normalize(orders, s) for s in connection}
    identity = (0,) * len(orders)
    if identity in conn:
        raise GraphError("connection set contains the identity")
    for s in conn:
        if tuple(-x % m for m, x in zip(orders, s)) not in conn:
            raise GraphError(f"connection set not inverse-closed: missing inverse of {s}")
    elems = group_elements(orders)
    rows = []
    for x in elems:
        row = 0
        for s in conn:
            y = tuple((a + b) % m for m, a, b in zip(orders, x, s))
            row |= 1 << element_index(orders, y)
        rows.append(row)
    return Graph(len(elems), tuple(rows))


def circulant(n: int, connection: Iterable[int]) -> Graph:
    return cayley_graph((n,), connection)
