"""Named graph families, dual Seidel switching and lexicographic-product criteria."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .field import field_of_order, prime_power
from .graph import (
    Graph,
    GraphError,
    VertexPermutation,
    complement,
    complete_graph,
    empty_graph,
    from_edges,
    is_automorphism,
    lexicographic_product,
    matching,
)
from .isomorphism import switching_involutions


class Family(enum.Enum):
    PALEY = "paley"
    LATTICE = "lattice"
    TRIANGULAR = "triangular"
    LATTICE_COMPLEMENT = "lattice-c"
    TRIANGULAR_COMPLEMENT = "triangular-c"
    HYPERCUBE_COMPLEMENT = "hypercube-c"
    TWO_CLIQUE_EXTENSION = "2ce"
    COMPLETE_TIMES_MATCHINGS = "kx-ym"
    CONFERENCE_TIMES_COCLIQUE = "conference-coclique"


_ARITY = {
    Family.PALEY: 1,
    Family.LATTICE: 1,
    Family.TRIANGULAR: 1,
    Family.LATTICE_COMPLEMENT: 1,
    Family.TRIANGULAR_COMPLEMENT: 1,
    Family.HYPERCUBE_COMPLEMENT: 1,
    Family.TWO_CLIQUE_EXTENSION: 1,
    Family.COMPLETE_TIMES_MATCHINGS: 2,
    Family.CONFERENCE_TIMES_COCLIQUE: 2,
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.params) != _ARITY[self.family]:
            raise ValueError(f"{self.family.value} takes {_ARITY[self.family]} parameter(s)")
        f, ps = self.family, self.params
        if f in (Family.PALEY, Family.TWO_CLIQUE_EXTENSION, Family.CONFERENCE_TIMES_COCLIQUE):
            _check_paley_order(ps[0])
        if f in (Family.LATTICE, Family.LATTICE_COMPLEMENT) and ps[0] < 3:
            raise ValueError("lattice graphs need n >= 3")
        if f in (Family.TRIANGULAR, Family.TRIANGULAR_COMPLEMENT) and ps[0] < 5:
            raise ValueError("triangular graphs need n >= 5")
        if f is Family.HYPERCUBE_COMPLEMENT and ps[0] < 1:
            raise ValueError("hypercube dimension must be positive")
        if f is Family.COMPLETE_TIMES_MATCHINGS and (ps[0] < 1 or ps[1] < 1):
            raise ValueError("K_x[yK2] needs x, y >= 1")
        if f is Family.CONFERENCE_TIMES_COCLIQUE and ps[1] < 1:
            raise ValueError("coclique size must be positive")


def _check_paley_order(q: int) -> None:
    if prime_power(q) is None or q % 4 != 1:
        raise ValueError(f"Paley graphs need a prime power q = 1 (mod 4), got {q}")


def paley(q: int) -> Graph:
    """Cayley graph of GF(q)+ on the non-zero squares (even powers of the primitive element)."""
    _check_paley_order(q)
    from .cyclotomic import _cayley_over_field

    field = field_of_order(q)
    squares = frozenset(field.power_of_primitive(2 * i) for i in range((q - 1) // 2))
    return _cayley_over_field(field, squares)


def lattice_index(n: int, x: int, y: int) -> int:
    """Row-major index of the 1-based cell (x, y)."""
    return (x - 1) * n + (y - 1)


def lattice(n: int) -> Graph:
    cells = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    return from_edges(
        n * n,
        [
            (lattice_index(n, *c), lattice_index(n, *d))
            for c, d in combinations(cells, 2)
            if c[0] == d[0] or c[1] == d[1]
        ],
    )


def triangular_vertices(n: int) -> list[tuple[int, int]]:
    """2-subsets of {1..n} in lexicographic order."""
    return list(combinations(range(1, n + 1), 2))


def triangular(n: int) -> Graph:
    verts = triangular_vertices(n)
    return from_edges(
        len(verts),
        [(i, j) for (i, u), (j, v) in combinations(enumerate(verts), 2) if len(set(u) & set(v)) == 1],
    )


def hypercube(d: int) -> Graph:
    n = 1 << d
    return from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def two_clique_extension(g: Graph) -> Graph:
    return lexicographic_product(g, complete_graph(2))


def build(spec: FamilySpec) -> Graph:
    f, ps = spec.family, spec.params
    if f is Family.PALEY:
        return paley(ps[0])
    if f is Family.LATTICE:
        return lattice(ps[0])
    if f is Family.TRIANGULAR:
        return triangular(ps[0])
    if f is Family.LATTICE_COMPLEMENT:
        return complement(lattice(ps[0]))
    if f is Family.TRIANGULAR_COMPLEMENT:
        return complement(triangular(ps[0]))
    if f is Family.HYPERCUBE_COMPLEMENT:
        return complement(hypercube(ps[0]))
    if f is Family.TWO_CLIQUE_EXTENSION:
        return two_clique_extension(paley(ps[0]))
    if f is Family.COMPLETE_TIMES_MATCHINGS:
        return lexicographic_product(complete_graph(ps[0]), matching(ps[1]))
    if f is Family.CONFERENCE_TIMES_COCLIQUE:
        return lexicographic_product(paley(ps[0]), empty_graph(ps[1]))
    raise ValueError(f"unknown family {f}")


class Involution(enum.Enum):
    MAIN_DIAGONAL = "main-diagonal"
    POINT_REFLECTION = "point-reflection"
    DIAGONAL_REFLECTION = "diagonal-reflection"
    I_AUTOMORPHISM = "i-automorphism"
    ONE_TWO = "one-two"


class SwitchingError(ValueError):
    pass


class NotAnAutomorphism(SwitchingError):
    pass


class NotAnInvolution(SwitchingError):
    pass


class MovesAdjacentPair(SwitchingError):
    pass


def validate_switching(g: Graph, p: VertexPermutation) -> None:
    """Raise the specific :class:`SwitchingError` that ``p`` triggers on ``g``."""
    if p.n != g.n:
        raise SwitchingError(f"permutation acts on {p.n} points, graph has {g.n} vertices")
    if not p.is_involution():
        raise NotAnInvolution(f"{p.cycle_notation()} has order greater than 2")
    if not is_automorphism(g, p):
        raise NotAnAutomorphism(f"{p.cycle_notation()} is not an automorphism")
    for x in range(g.n):
        if p(x) != x and g.adjacent(x, p(x)):
            raise MovesAdjacentPair(f"{p.cycle_notation()} swaps adjacent vertices {x} and {p(x)}")


def named_involution(family: Family, n: int, which: Involution, i: int | None = None) -> VertexPermutation:
    """The involutions of L(n), T(n) and their complements used for switching.

    ``i`` selects the i-automorphism of the lattice complement (swap the
    first i pairs of rows).
    """
    if family is Family.LATTICE:
        if which is Involution.MAIN_DIAGONAL:
            img = [lattice_index(n, y, x) for x in range(1, n + 1) for y in range(1, n + 1)]
        elif which is Involution.POINT_REFLECTION:
            if n % 2:
                raise ValueError("point reflection of L(n) swaps adjacent vertices for odd n")
            img = [lattice_index(n, n + 1 - x, n + 1 - y) for x in range(1, n + 1) for y in range(1, n + 1)]
        else:
            raise ValueError(f"{which.value} is not defined for L(n)")
        graph = lattice(n)
    elif family is Family.TRIANGULAR:
        if which is not Involution.DIAGONAL_REFLECTION:
            raise ValueError(f"{which.value} is not defined for T(n)")
        if n % 2:
            raise ValueError("T(n) has no switching involution for odd n")
        verts = triangular_vertices(n)
        index = {v: k for k, v in enumerate(verts)}
        img = [index[tuple(sorted((n + 1 - y, n + 1 - x)))] for x, y in verts]
        graph = triangular(n)
    elif family is Family.LATTICE_COMPLEMENT:
        if which is not Involution.I_AUTOMORPHISM:
            raise ValueError(f"{which.value} is not defined for the lattice complement")
        if i is None or not 1 <= i <= n // 2:
            raise ValueError(f"i-automorphism needs 1 <= i <= {n // 2}")

        def row_swap(x: int) -> int:
            if x <= 2 * i:
                return x + 1 if x % 2 else x - 1
            return x

        img = [lattice_index(n, row_swap(x), y) for x in range(1, n + 1) for y in range(1, n + 1)]
        graph = complement(lattice(n))
    elif family is Family.TRIANGULAR_COMPLEMENT:
        if which is not Involution.ONE_TWO:
            raise ValueError(f"{which.value} is not defined for the triangular complement")
        verts = triangular_vertices(n)
        index = {v: k for k, v in enumerate(verts)}
        swap = {1: 2, 2: 1}
        img = [index[tuple(sorted((swap.get(x, x), swap.get(y, y))))] for x, y in verts]
        graph = complement(triangular(n))
    else:
        raise ValueError(f"no named involutions for {family.value}")
    perm = VertexPermutation(tuple(img))
    validate_switching(graph, perm)
    return perm


def dual_seidel_switch(g: Graph, p: VertexPermutation) -> Graph:
    """Permute the rows of the adjacency matrix by ``p``.

    Vertex x of the result has the neighbourhood of ``p(x)`` in g.
    """
    validate_switching(g, p)
    return Graph(g.n, tuple(g.rows[p(x)] for x in range(g.n)))


def quasi_lattice(n: int, which: Involution = Involution.MAIN_DIAGONAL) -> Graph:
    if n == 4:
        raise ValueError("L(4) has parameters (16,6,2,2) with a = b; switching cannot give a strictly Deza graph")
    return dual_seidel_switch(lattice(n), named_involution(Family.LATTICE, n, which))


def quasi_triangular(n: int) -> Graph:
    if n == 6:
        raise ValueError("T(6) has parameters (15,8,4,4) with a = b; switching cannot give a strictly Deza graph")
    return dual_seidel_switch(triangular(n), named_involution(Family.TRIANGULAR, n, Involution.DIAGONAL_REFLECTION))


def find_switching_involutions(g: Graph, limit: int | None = None) -> list[VertexPermutation]:
    if g.n > 64:
        raise GraphError("involution search is limited to 64 vertices")
    return switching_involutions(g, limit)


def deza_product_criterion(srg_params, deza_params) -> bool:
    """Is ``G1[G2]`` Deza, for G1 strongly regular and G2 Deza?

    Collects the common-neighbour counts the product can realize: within a
    fibre (``a + k n'``, ``b + k n'``), across an edge of G1
    (``lambda n' + 2k'``) and across a non-edge (``mu n'``).  Terms for
    pair types that cannot occur (G1 complete or edgeless, G2 a single
    vertex) are dropped, so ``K_x`` may be passed with any ``mu``.
    """
    n, k, lam, mu = srg_params
    n2, k2, b, a = deza_params
    values = set()
    if n2 >= 2:
        values.update((a + k * n2, b + k * n2))
    if n >= 2 and k > 0:
        values.add(lam * n2 + 2 * k2)
    if n >= 2 and k < n - 1:
        values.add(mu * n2)
    return len(values) <= 2
