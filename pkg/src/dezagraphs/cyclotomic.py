"""Three-class cyclotomic schemes over GF(q) and the Deza graphs they yield.

Relation ``R_i`` (i = 1, 2, 3) holds between x and y when ``x - y`` lies in
the coset ``alpha**i * S``, with S the index-3 subgroup of GF(q)*.  Index 3
and index 0 name the same coset, so ``R_3`` is S itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import FiniteField, field_of_order, is_prime, prime_power
from .graph import Graph

E = 3


def is_symmetric_cyclotomic(q: int, e: int) -> bool:
    """The class-e cyclotomic scheme on GF(q) is symmetric iff q or (q-1)/e is even."""
    if (q - 1) % e:
        raise ValueError(f"{e} does not divide {q} - 1")
    return q % 2 == 0 or ((q - 1) // e) % 2 == 0


def class_of(field: FiniteField, x: int) -> int:
    """Relation index 1..3 of a non-zero element."""
    return (field.log[x] - 1) % E + 1


def coset(field: FiniteField, i: int) -> frozenset[int]:
    return frozenset(x for x in range(1, field.q) if class_of(field, x) == (i - 1) % E + 1)


def solve_lm(q: int) -> tuple[int, int]:
    """The non-negative solution of ``L^2 + 27 M^2 = 4q``.

    Raises if the search finds no solution or more than one.
    """
    sols = []
    for m in range(math.isqrt(4 * q // 27) + 1):
        rest = 4 * q - 27 * m * m
        root = math.isqrt(rest)
        if root * root == rest:
            sols.append((root, m))
    if len(sols) != 1:
        raise ArithmeticError(f"L^2 + 27M^2 = {4 * q} has {len(sols)} non-negative solutions: {sols}")
    return sols[0]


@dataclass(frozen=True)
class SchemeData:
    q: int
    t: int
    classes: tuple[frozenset[int], frozenset[int], frozenset[int]]
    # intersection[k-1][i-1][j-1] == p_ij^k
    intersection: tuple[tuple[tuple[int, ...], ...], ...]
    r: int
    s: int
    L: int
    M: int

    def p(self, i: int, j: int, k: int) -> int:
        return self.intersection[(k - 1) % E][(i - 1) % E][(j - 1) % E]

    def expected_table(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """The intersection numbers predicted from (t, r, s) alone."""
        t, r, s = self.t, self.r, self.s
        u = t - r - s
        p1 = ((u - 1, s, r), (s, r, u), (r, u, s))
        p2 = ((s, r, u), (r, u - 1, s), (u, s, r))
        p3 = ((r, u, s), (u, s, r), (s, r, u - 1))
        return (p1, p2, p3)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "t": self.t,
            "classes": [sorted(c) for c in self.classes],
            "p_ijk": [[list(row) for row in block] for block in self.intersection],
            "r": self.r,
            "s": self.s,
            "L": self.L,
            "M": self.M,
        }


def scheme(field: FiniteField) -> SchemeData:
    q = field.q
    if (q - 1) % E:
        raise ValueError(f"3 does not divide q - 1 = {q - 1}")
    if not is_symmetric_cyclotomic(q, E):
        raise ValueError(f"cyclotomic scheme on GF({q}) is not symmetric")
    t = (q - 1) // E
    classes = tuple(coset(field, i) for i in (1, 2, 3))
    if field.neg(1) not in classes[2]:
        raise ArithmeticError("-1 is not in the index-3 subgroup")
    cls = [0] + [class_of(field, x) for x in range(1, q)]
    table = []
    for k in (1, 2, 3):
        # S is symmetric, so x ~_i z is the same as z - x in class i.
        x = min(classes[k - 1])
        counts = [[0] * E for _ in range(E)]
        for z in range(q):
            if z == 0 or z == x:
                continue
            i = cls[z]
            j = cls[field.sub(z, x)]
            counts[i - 1][j - 1] += 1
        table.append(tuple(tuple(row) for row in counts))
    table = tuple(table)
    s = table[1][0][0]
    r = table[2][0][0]
    data = SchemeData(q, t, classes, table, r, s, 6 * t - 2 - 9 * (r + s), r - s)
    _verify(data)
    return data


def _verify(d: SchemeData) -> None:
    if any(len(c) != d.t for c in d.classes):
        raise ArithmeticError("scheme is not pseudocyclic")
    if d.intersection != d.expected_table():
        raise ArithmeticError("intersection numbers do not follow the (t, r, s) pattern")
    if not eq1_holds(d):
        raise ArithmeticError("(t, r, s) violate 1+2(r+s)-3(r-s)^2 = (1+3(r+s)-2t)^2")
    if d.L**2 + 27 * d.M**2 != 4 * d.q:
        raise ArithmeticError("L^2 + 27 M^2 != 4q")


def eq1_holds(d: SchemeData) -> bool:
    r, s, t = d.r, d.s, d.t
    return 1 + 2 * (r + s) - 3 * (r - s) ** 2 == (1 + 3 * (r + s) - 2 * t) ** 2


def cyclic_shift_holds(d: SchemeData) -> bool:
    return all(
        d.p(i, j, k) == d.p(i + 1, j + 1, k + 1) for i in (1, 2, 3) for j in (1, 2, 3) for k in (1, 2, 3)
    )


def _cayley_over_field(field: FiniteField, connection: frozenset[int]) -> Graph:
    rows = []
    for x in range(field.q):
        sums = field.add_table_row(x)
        row = 0
        for s in connection:
            row |= 1 << int(sums[s])
        rows.append(row)
    return Graph(field.q, tuple(rows))


def _check_preconditions(field: FiniteField) -> None:
    if (field.q - 1) % E:
        raise ValueError(f"3 does not divide q - 1 = {field.q - 1}")
    if not is_symmetric_cyclotomic(field.q, E):
        raise ValueError(f"cyclotomic scheme on GF({field.q}) is not symmetric")


def gamma(field: FiniteField, i: int) -> Graph:
    """The graph of relation ``R_i``: Cay(GF(q)+, alpha^i S)."""
    _check_preconditions(field)
    return _cayley_over_field(field, coset(field, i))


def gamma_bar(field: FiniteField, i: int) -> Graph:
    """The union of the two relations other than ``R_i``."""
    _check_preconditions(field)
    return _cayley_over_field(field, frozenset(range(1, field.q)) - coset(field, i))


def _square_root(m: int) -> int | None:
    if m < 0:
        return None
    r = math.isqrt(m)
    return r if r * r == m else None


def one_class_predicate(q: int) -> bool:
    """q is prime and q - 3 is a perfect square."""
    return is_prime(q) and _square_root(q - 3) is not None


def two_class_predicate(q: int) -> bool:
    """q is prime and q - 12 is a perfect square."""
    return is_prime(q) and _square_root(q - 12) is not None


def certificate_x(q: int, offset: int) -> int | None:
    """The x with ``q == x^2 + offset`` normalized to ``x = 1 (mod 3)``."""
    x = _square_root(q - offset)
    if x is None:
        return None
    return x if x % 3 == 1 else -x


def fusion_sums(d: SchemeData, subset) -> tuple[int, int, int]:
    """``sum_{f,g in F} p_fg^k`` for k = 1, 2, 3."""
    F = sorted(set(subset))
    return tuple(sum(d.p(f, g, k) for f in F for g in F) for k in (1, 2, 3))


def fusion_check(d: SchemeData, subset) -> bool:
    """Deza criterion for the union of the relations in ``subset``."""
    F = set(subset)
    if not F or not F < {1, 2, 3}:
        raise ValueError("subset must be a non-empty proper subset of {1, 2, 3}")
    return len(set(fusion_sums(d, F))) <= 2


def scheme_report(q: int) -> dict:
    """Everything the ``scheme`` command prints for one q."""
    field = field_of_order(q)
    d = scheme(field)
    try:
        lm = solve_lm(q)
        unique = True
    except ArithmeticError:
        lm = (abs(d.L), abs(d.M))
        unique = False
    out = d.to_json()
    out.update(
        {
            "primitive": field.primitive,
            "modulus": list(field.modulus),
            "lm_unique": unique,
            "lm_abs": list(lm),
            "eq1": eq1_holds(d),
            "cyclic_shift": cyclic_shift_holds(d),
            "one_class_predicate": one_class_predicate(q),
            "two_class_predicate": two_class_predicate(q),
            "x_one_class": certificate_x(q, 3) if one_class_predicate(q) else None,
            "x_two_class": certificate_x(q, 12) if two_class_predicate(q) else None,
        }
    )
    return out


def cyclotomic_orders(limit: int) -> list[int]:
    """Prime powers q <= limit with 3 | q - 1 and a symmetric scheme."""
    return [
        q
        for q in range(4, limit + 1)
        if prime_power(q) is not None and (q - 1) % E == 0 and is_symmetric_cyclotomic(q, E)
    ]
