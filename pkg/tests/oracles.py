"""Brute-force reference computations, independent of the package internals.

Everything here works on plain Python sets or networkx graphs built straight
from an edge list, so a bug in the bit-row code cannot leak into both sides
of a comparison.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations

import networkx as nx


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def neighbor_sets(g) -> list[set[int]]:
    nb = [set() for _ in range(g.n)]
    for u, v in g.edges():
        nb[u].add(v)
        nb[v].add(u)
    return nb


def census(g) -> dict[tuple[int, int], int]:
    """|N(u) & N(v)| for every unordered pair."""
    nb = neighbor_sets(g)
    return {(u, v): len(nb[u] & nb[v]) for u, v in combinations(range(g.n), 2)}


def brute_deza_params(g):
    """(n, k, b, a) if g is regular with exactly two pair values, else None."""
    degs = {len(s) for s in neighbor_sets(g)}
    if len(degs) != 1:
        return None
    vals = sorted(set(census(g).values()))
    if len(vals) != 2:
        return None
    return (g.n, degs.pop(), vals[1], vals[0])


def brute_srg_params(g):
    nb = neighbor_sets(g)
    degs = {len(s) for s in nb}
    if len(degs) != 1:
        return None
    lam, mu = set(), set()
    for (u, v), c in census(g).items():
        (lam if v in nb[u] else mu).add(c)
    if len(lam) == 1 and len(mu) == 1:
        return (g.n, degs.pop(), lam.pop(), mu.pop())
    return None


def value_counts_per_vertex(g) -> list[dict[int, int]]:
    """For each vertex x, how many other vertices share each pair value with x."""
    out = [defaultdict(int) for _ in range(g.n)]
    for (u, v), c in census(g).items():
        out[u][c] += 1
        out[v][c] += 1
    return [dict(d) for d in out]


def nx_diameter(g):
    h = to_nx(g)
    return nx.diameter(h) if nx.is_connected(h) else None


def circulant_edges(n: int, conn) -> list[tuple[int, int]]:
    conn = set(conn)
    return [(x, y) for x, y in combinations(range(n), 2) if (y - x) % n in conn]


def difference_counts(n: int, conn) -> dict[int, int]:
    counts = {d: 0 for d in range(1, n)}
    for s in conn:
        for t in conn:
            if s != t:
                counts[(s - t) % n] += 1
    return counts


def gf_prime_primitive(p: int) -> int:
    """Smallest generator of (Z/p)*, by checking every order directly."""
    for g in range(1, p):
        if len({pow(g, k, p) for k in range(1, p)}) == p - 1:
            return g
    raise ValueError(p)


def cubic_residue_classes(p: int) -> list[set[int]]:
    """Cosets alpha^i <alpha^3> of GF(p)*, i = 1, 2, 3, for prime p."""
    g = gf_prime_primitive(p)
    return [{pow(g, i + 3 * j, p) for j in range((p - 1) // 3)} for i in (1, 2, 3)]


def intersection_numbers_prime(p: int) -> dict[tuple[int, int, int], int]:
    """p_ij^k over GF(p) by direct counting over all pairs in each relation."""
    cls = cubic_residue_classes(p)
    rel = {}
    for i, c in enumerate(cls, start=1):
        for x in range(p):
            for y in range(p):
                if (x - y) % p in c:
                    rel[(x, y)] = i
    out = {}
    for k in (1, 2, 3):
        pairs = [xy for xy, r in rel.items() if r == k]
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                vals = {sum(1 for z in range(p) if rel.get((x, z)) == i and rel.get((z, y)) == j) for x, y in pairs}
                assert len(vals) == 1
                out[(i, j, k)] = vals.pop()
    return out
