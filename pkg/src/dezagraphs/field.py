"""Exact arithmetic in GF(p^h).

An element is the int whose base-p digits, least significant first, are the
coefficients of its polynomial representative.  This additive encoding is the
canonical vertex order for every graph built over a field.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_ORDER = 1 << 16


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, h)`` with ``q == p**h``, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    h = 0
    while q % p == 0:
        q //= p
        h += 1
    return (p, h) if q == 1 else None


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo monic ``m`` over GF(p)."""
    a = _trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        coef = a[-1]
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mc) % p
        _trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _digits(x: int, p: int, h: int) -> list[int]:
    out = []
    for _ in range(h):
        out.append(x % p)
        x //= p
    return out


def _from_digits(d, p: int) -> int:
    x = 0
    for c in reversed(list(d)):
        x = x * p + int(c)
    return x


def _is_irreducible(m: list[int], p: int) -> bool:
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for c in range(p**d):
            divisor = _digits(c, p, d) + [1]
            if not _poly_mod(m, divisor, p):
                return False
    return True


@dataclass(frozen=True)
class FiniteField:
    p: int
    h: int
    modulus: tuple[int, ...]
    primitive: int
    exp: tuple[int, ...] = field(repr=False)
    log: dict[int, int] = field(repr=False)
    digits: np.ndarray = field(repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.h

    def elements(self) -> range:
        return range(self.q)

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        return _from_digits((self.digits[x] + self.digits[y]) % self.p, self.p)

    def neg(self, x: int) -> int:
        return _from_digits((-self.digits[x]) % self.p, self.p)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.log[x] + self.log[y]) % (self.q - 1)]

    def power_of_primitive(self, e: int) -> int:
        return self.exp[e % (self.q - 1)]

    def add_table_row(self, x: int) -> np.ndarray:
        """``x + y`` for every element y, in canonical order."""
        w = self.p ** np.arange(self.h)
        return ((self.digits[x] + self.digits) % self.p) @ w

    def modulus_str(self) -> str:
        terms = []
        for i in range(len(self.modulus) - 1, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(mono if c == 1 and i > 0 else (f"{c}" if i == 0 else f"{c}*{mono}"))
        return " + ".join(terms)


def make_field(p: int, h: int = 1) -> FiniteField:
    """GF(p^h) with the smallest irreducible modulus and smallest primitive element.

    "Smallest" compares polynomials by their base-p integer encoding.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if h < 1:
        raise ValueError("extension degree must be at least 1")
    q = p**h
    if q > MAX_ORDER:
        raise ValueError(f"field order {q} exceeds {MAX_ORDER}")
    modulus = None
    for c in range(p**h):
        cand = _digits(c, p, h) + [1]
        if _is_irreducible(cand, p):
            modulus = cand
            break
    assert modulus is not None

    def mulpoly(x: int, y: int) -> int:
        prod = _poly_mul(_trim(_digits(x, p, h)), _trim(_digits(y, p, h)), p)
        return _from_digits(_poly_mod(prod, modulus, p), p)

    for g in range(2 if q > 2 else 1, q):
        powers = [1]
        x = g
        while x != 1:
            powers.append(x)
            x = mulpoly(x, g)
            if len(powers) > q - 1:
                break
        if len(powers) == q - 1:
            break
    else:
        raise ArithmeticError("no primitive element found")
    log = {v: i for i, v in enumerate(powers)}
    digits = np.array([_digits(x, p, h) for x in range(q)], dtype=np.int64)
    return FiniteField(p, h, tuple(modulus), g, tuple(powers), log, digits)


def field_of_order(q: int) -> FiniteField:
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    return make_field(*pp)
