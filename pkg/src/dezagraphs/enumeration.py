"""Exhaustive search for Deza circulants and the 2p-vertex classification check."""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .analysis import DEZA, STRONGLY_REGULAR, classify
from .constructions import paley, two_clique_extension
from .field import is_prime
from .graph import GraphError, _normalize, circulant, group_elements
from .graphio import from_graph6, to_graph6
from .isomorphism import is_isomorphic

MIN_N = 4
MAX_N = 40


class CensusDivergence(RuntimeError):
    pass


@dataclass(frozen=True)
class CensusRecord:
    n: int
    connection: tuple[int, ...]
    k: int
    b: int
    a: int
    strictly_deza: bool
    graph6: str
    class_id: int

    def to_json(self) -> dict:
        d = asdict(self)
        d["connection"] = list(self.connection)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "CensusRecord":
        return cls(d["n"], tuple(d["connection"]), d["k"], d["b"], d["a"], d["strictly_deza"], d["graph6"], d["class_id"])


def half_set_to_connection(n: int, mask: int) -> tuple[int, ...]:
    """Inverse-closed set generated by the half-set encoded in ``mask``.

    Bit i-1 of ``mask`` selects element i of {1, ..., n // 2}.
    """
    elems = set()
    for i in range(1, n // 2 + 1):
        if mask >> (i - 1) & 1:
            elems.add(i)
            elems.add(n - i)
    return tuple(sorted(elems))


def units(n: int) -> list[int]:
    return [u for u in range(1, n) if math.gcd(u, n) == 1]


def multiplier_canonical(n: int, connection: Iterable[int], unit_list: Sequence[int] | None = None) -> tuple[int, ...]:
    """Lexicographically least sorted image ``u * S`` over units u of Z_n."""
    conn = tuple(connection)
    us = unit_list if unit_list is not None else units(n)
    return min(tuple(sorted(u * s % n for s in conn)) for u in us)


def difference_multiplicities(group_orders: Sequence[int], connection: Iterable) -> dict[tuple[int, ...], int]:
    """How often each non-identity element arises as ``s - t`` with s, t in S."""
    orders = tuple(group_orders)
    conn = [_normalize(orders, s) for s in set(connection)]
    counts = {x: 0 for x in group_elements(orders) if any(x)}
    for s in conn:
        for t in conn:
            d = tuple((x - y) % m for m, x, y in zip(orders, s, t))
            if any(d):
                counts[d] += 1
    return counts


def cayley_deza_check(group_orders: Sequence[int], connection: Iterable) -> bool:
    """Difference-multiset test: at most two multiplicities over G minus the identity.

    A difference that never occurs contributes the value 0.
    """
    conn = list(connection)
    orders = tuple(group_orders)
    norm = {_normalize(orders, s) for s in conn}
    if (0,) * len(orders) in norm:
        raise GraphError("connection set contains the identity")
    for s in norm:
        if tuple(-x % m for m, x in zip(orders, s)) not in norm:
            raise GraphError(f"connection set not inverse-closed at {s}")
    return len(set(difference_multiplicities(orders, conn).values())) <= 2


def _scan(n: int, masks: Sequence[int], strict_only: bool) -> list[tuple[tuple[int, ...], int, int, int, bool]]:
    us = units(n)
    found = []
    for mask in masks:
        conn = half_set_to_connection(n, mask)
        if multiplier_canonical(n, conn, us) != conn:
            continue
        if math.gcd(n, *conn) != 1:
            continue
        rep = classify(circulant(n, conn))
        if strict_only:
            if not rep.strictly_deza:
                continue
        elif rep.kind not in (DEZA, STRONGLY_REGULAR):
            continue
        b = rep.b if rep.b is not None else rep.lam
        a = rep.a if rep.a is not None else rep.lam
        found.append((conn, rep.k, b, a, rep.strictly_deza))
    return found


def enumerate_circulants(n: int, strict_only: bool = True, jobs: int = 1, masks: Sequence[int] | None = None) -> list[CensusRecord]:
    """One record per isomorphism class of connected (strictly) Deza circulants on n vertices.

    ``strict_only=False`` keeps every Deza circulant, strongly regular ones
    included.  ``masks`` overrides the candidate iteration order (testing).
    """
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"n = {n} outside the search budget {MIN_N}..{MAX_N}")
    all_masks = list(range(1, 1 << (n // 2))) if masks is None else list(masks)
    if jobs > 1:
        chunks = [all_masks[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = pool.map(_scan, [n] * jobs, chunks, [strict_only] * jobs)
            hits = [h for part in parts for h in part]
    else:
        hits = _scan(n, all_masks, strict_only)
    hits.sort(key=lambda h: (h[1], h[2], h[3], h[0]))
    reps: list[tuple] = []
    graphs = []
    for hit in hits:
        g = circulant(n, hit[0])
        if any(r[1:4] == hit[1:4] and is_isomorphic(g, h)[0] for r, h in zip(reps, graphs)):
            continue
        reps.append(hit)
        graphs.append(g)
    return [
        CensusRecord(n, conn, k, b, a, strict, to_graph6(g), cid)
        for cid, ((conn, k, b, a, strict), g) in enumerate(zip(reps, graphs))
    ]


def check_record(rec: CensusRecord) -> bool:
    """Does the stored graph6 re-classify to the stored parameters?"""
    rep = classify(from_graph6(rec.graph6))
    b = rep.b if rep.b is not None else rep.lam
    a = rep.a if rep.a is not None else rep.lam
    return (rep.k, b, a, rep.strictly_deza) == (rec.k, rec.b, rec.a, rec.strictly_deza)


def results_dir() -> Path:
    return Path(os.environ.get("DEZA_RESULTS_DIR", "results"))


def census_path(n: int, strict_only: bool, directory: Path | None = None) -> Path:
    base = directory if directory is not None else results_dir()
    return base / (f"census-n{n}-strict.jsonl" if strict_only else f"census-n{n}.jsonl")


def persist_census(records: Sequence[CensusRecord], n: int, strict_only: bool, directory: Path | None = None) -> Path:
    """Write the census, or compare against an existing file and fail on divergence."""
    path = census_path(n, strict_only, directory)
    lines = [json.dumps(r.to_json(), sort_keys=True) for r in records]
    if path.exists():
        stored = [ln for ln in path.read_text().splitlines() if ln.strip()]
        if stored != lines:
            raise CensusDivergence(f"census for n={n} differs from {path}")
        return path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(ln + "\n" for ln in lines))
    return path


def load_census(path: Path) -> list[CensusRecord]:
    return [CensusRecord.from_json(json.loads(ln)) for ln in path.read_text().splitlines() if ln.strip()]


@dataclass(frozen=True)
class Verdict:
    p: int
    verified: bool
    classes: int
    params: tuple[int, int, int, int] | None

    def to_json(self) -> dict:
        return {"p": self.p, "verified": self.verified, "classes": self.classes,
                "params": list(self.params) if self.params else None}


def verify_2p(p: int, jobs: int = 1) -> Verdict:
    """Check that the strictly Deza circulants on 2p vertices are exactly P(p)[K2] (or none)."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if 2 * p > MAX_N:
        raise ValueError(f"2p = {2 * p} exceeds the search budget {MAX_N}")
    records = enumerate_circulants(2 * p, strict_only=True, jobs=jobs)
    if p % 4 == 3:
        return Verdict(p, not records, len(records), None)
    expected = (2 * p, p, p - 1, (p - 1) // 2)
    if len(records) != 1:
        return Verdict(p, False, len(records), None)
    rec = records[0]
    params = (rec.n, rec.k, rec.b, rec.a)
    ok = params == expected and is_isomorphic(from_graph6(rec.graph6), two_clique_extension(paley(p)))[0]
    return Verdict(p, ok, 1, params)

