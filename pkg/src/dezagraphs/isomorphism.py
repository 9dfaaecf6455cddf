"""Isomorphism testing and restricted automorphism search.

Both graphs are coloured by a vertex invariant (degree plus the multiset of
common-neighbour counts split by adjacency), the colouring is refined to an
equitable partition, and the search individualizes one vertex of the smallest
non-singleton cell at a time.  Colour ids are assigned from the union of both
graphs' signatures so that equal ids mean equal cells.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

from .graph import Graph, VertexPermutation, _bits


def _initial_colors(g: Graph) -> list[tuple]:
    sigs = []
    for u in range(g.n):
        ru = g.rows[u]
        cnt = Counter()
        for v in range(g.n):
            if v != u:
                cnt[(ru >> v & 1, (ru & g.rows[v]).bit_count())] += 1
        sigs.append((ru.bit_count(), tuple(sorted(cnt.items()))))
    return sigs


def _relabel_jointly(sig_lists: Sequence[Sequence]) -> list[list[int]]:
    ids = {s: i for i, s in enumerate(sorted({s for sigs in sig_lists for s in sigs}))}
    return [[ids[s] for s in sigs] for sigs in sig_lists]


def _refine(graphs: Sequence[Graph], colorings: list[list[int]]) -> list[list[int]]:
    """Refine all colourings together until the cell count stops growing."""
    nbrs = [[g.neighbors(v) for v in range(g.n)] for g in graphs]
    count = len({c for col in colorings for c in col})
    while True:
        sigs = []
        for col, nb in zip(colorings, nbrs):
            sigs.append(
                [(col[v], tuple(sorted(Counter(col[u] for u in nb[v]).items()))) for v in range(len(col))]
            )
        colorings = _relabel_jointly(sigs)
        new_count = len({c for col in colorings for c in col})
        if new_count == count:
            return colorings
        count = new_count


def equitable_partition(g: Graph) -> list[int]:
    """Colour of each vertex in the refined invariant partition."""
    (col,) = _refine([g], _relabel_jointly([_initial_colors(g)]))
    return col


def _search(g1: Graph, g2: Graph, c1: list[int], c2: list[int]) -> list[int] | None:
    c1, c2 = _refine([g1, g2], [c1, c2])
    if sorted(c1) != sorted(c2):
        return None
    cells = Counter(c1)
    if all(size == 1 for size in cells.values()):
        where = {c: v for v, c in enumerate(c2)}
        mapping = [where[c] for c in c1]
        for u in range(g1.n):
            img = 0
            for v in _bits(g1.rows[u]):
                img |= 1 << mapping[v]
            if img != g2.rows[mapping[u]]:
                return None
        return mapping
    target = min((size, c) for c, size in cells.items() if size > 1)[1]
    v = c1.index(target)
    fresh = max(cells) + 1
    for w in (x for x, c in enumerate(c2) if c == target):
        n1 = list(c1)
        n2 = list(c2)
        n1[v] = fresh
        n2[w] = fresh
        found = _search(g1, g2, n1, n2)
        if found is not None:
            return found
    return None


def find_isomorphism(g1: Graph, g2: Graph) -> VertexPermutation | None:
    """A permutation ``phi`` with ``u ~ v`` in g1 iff ``phi(u) ~ phi(v)`` in g2."""
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    c1, c2 = _relabel_jointly([_initial_colors(g1), _initial_colors(g2)])
    mapping = _search(g1, g2, c1, c2)
    return None if mapping is None else VertexPermutation(tuple(mapping))


def is_isomorphic(g1: Graph, g2: Graph) -> tuple[bool, VertexPermutation | None]:
    phi = find_isomorphism(g1, g2)
    return phi is not None, phi


def _involution_search(g: Graph, nonadjacent_only: bool) -> Iterator[VertexPermutation]:
    n = g.n
    colors = equitable_partition(g)
    # BFS order keeps freshly assigned vertices close to assigned ones, which
    # makes the adjacency consistency checks bite early.
    order: list[int] = []
    seen = 0
    for root in range(n):
        if seen >> root & 1:
            continue
        queue = [root]
        seen |= 1 << root
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in _bits(g.rows[v] & ~seen):
                seen |= 1 << u
                queue.append(u)
    image = [-1] * n
    assigned: list[int] = []

    def consistent(v: int, w: int) -> bool:
        rv, rw = g.rows[v], g.rows[w]
        for x in assigned:
            y = image[x]
            if (rv >> x & 1) != (rw >> y & 1):
                return False
            if (rw >> x & 1) != (rv >> y & 1):
                return False
        return True

    def rec(pos: int) -> Iterator[VertexPermutation]:
        while pos < n and image[order[pos]] != -1:
            pos += 1
        if pos == n:
            yield VertexPermutation(tuple(image))
            return
        v = order[pos]
        candidates = [v] + [
            w
            for w in range(n)
            if w != v and image[w] == -1 and colors[w] == colors[v]
            and not (nonadjacent_only and g.adjacent(v, w))
        ]
        for w in candidates:
            if not consistent(v, w):
                continue
            image[v] = w
            image[w] = v
            assigned.append(v)
            if w != v:
                assigned.append(w)
            yield from rec(pos + 1)
            assigned.pop()
            if w != v:
                assigned.pop()
            image[v] = -1
            image[w] = -1

    yield from rec(0)


def switching_involutions(g: Graph, limit: int | None = None) -> list[VertexPermutation]:
    """Automorphisms of order <= 2 whose 2-cycles all join non-adjacent vertices.

    The identity is always included.  ``limit`` caps the number returned.
    """
    out = []
    for perm in _involution_search(g, nonadjacent_only=True):
        out.append(perm)
        if limit is not None and len(out) >= limit:
            break
    return out


def group_by_conjugacy(
    involutions: Sequence[VertexPermutation], generators: Sequence[VertexPermutation]
) -> list[list[VertexPermutation]]:
    """Partition ``involutions`` into orbits under conjugation by ``generators``.

    Orbits are closed only within the supplied list, so the result is exact
    when the list is closed under the group the generators span.
    """
    members = {p.image: p for p in involutions}
    groups = []
    done: set[tuple[int, ...]] = set()
    for p in involutions:
        if p.image in done:
            continue
        orbit = [p]
        done.add(p.image)
        stack = [p]
        while stack:
            cur = stack.pop()
            for h in generators:
                conj = h.compose(cur).compose(h.inverse())
                if conj.image in members and conj.image not in done:
                    done.add(conj.image)
                    orbit.append(members[conj.image])
                    stack.append(conj)
        groups.append(orbit)
    return groups
