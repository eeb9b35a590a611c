"""Fusion ring of Ver_p(SL(n)).

Simples are partitions in the (p-n) x (n-1) box.  Fusion coefficients come
from Kac-Walton folding: classical Littlewood-Richardson products are
shifted by rho and moved into the fundamental alcove at shifted level p by
the affine Weyl group, with a sign for each reflection; weights fixed by a
reflection cancel.
"""
from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from pathlib import Path
from typing import Optional

from .lr import Partition, lr_coefficients, strip
from .qcyclo import CycNum, check_prime, qint


@dataclass(frozen=True)
class SLnParams:
    p: int
    n: int

    def __post_init__(self):
        check_prime(self.p)
        if not isinstance(self.n, int) or not 2 <= self.n < self.p:
            raise ValueError(f"need 2 <= n < p, got n={self.n}, p={self.p}")

    @property
    def level(self) -> int:
        return self.p - self.n


@dataclass(frozen=True)
class AlcoveWeight:
    params: SLnParams
    parts: Partition

    def __post_init__(self):
        parts = strip(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or any(x < 0 for x in parts):
            raise ValueError(f"{parts} is not a partition")
        if len(parts) > self.params.n - 1 or (parts and parts[0] > self.params.level):
            raise ValueError(
                f"{parts} lies outside the ({self.params.level} x {self.params.n - 1}) alcove box"
            )

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


FusionExpansion = dict  # AlcoveWeight -> positive multiplicity


def weight(p: int, n: int, parts) -> AlcoveWeight:
    return AlcoveWeight(SLnParams(p, n), tuple(parts))


def enumerate_simples(params: SLnParams) -> list[AlcoveWeight]:
    """All partitions in the box, ordered by size then reverse-lexicographically."""
    out = []
    for parts in product(range(params.level + 1), repeat=params.n - 1):
        if all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)):
            out.append(AlcoveWeight(params, parts))
    out.sort(key=lambda w: (w.size, tuple(-x for x in w.parts)))
    return out


def fold(p: int, n: int, parts) -> Optional[tuple[int, Partition]]:
    """Move an SL(n) weight into the level-(p-n) alcove.

    Returns (sign, alcove partition), or None when the shifted weight lies on
    a wall of the affine Weyl group at level p.
    """
    parts = list(parts) + [0] * (n - len(parts))
    if len(parts) > n:
        raise ValueError("weight has more than n rows")
    x = [parts[i] + n - 1 - i for i in range(n)]
    sign = 1
    while True:
        moved = False
        for i in range(n - 1):
            if x[i] == x[i + 1]:
                return None
            if x[i] < x[i + 1]:
                x[i], x[i + 1] = x[i + 1], x[i]
                sign = -sign
                moved = True
        if moved:
            continue
        gap = x[0] - x[-1]
        if gap == p:
            return None
        if gap < p:
            break
        # reflection in the affine wall x_1 - x_n = p
        x[0], x[-1] = x[-1] + p, x[0] - p
        sign = -sign
    lam = [x[i] - (n - 1 - i) for i in range(n)]
    return sign, strip(v - lam[-1] for v in lam)


def _fuse_parts(p: int, n: int, lam: Partition, mu: Partition) -> dict[Partition, int]:
    acc: dict[Partition, int] = {}
    for nu, c in lr_coefficients(lam, mu, n).items():
        folded = fold(p, n, nu)
        if folded is None:
            continue
        sign, target = folded
        acc[target] = acc.get(target, 0) + sign * c
    out = {}
    for target, c in acc.items():
        if c < 0:
            raise ArithmeticError(f"negative fusion coefficient for {target}: folding bug")
        if c:
            out[target] = c
    return out


class FusionCache:
    """Memo store for fusion products, keyed by (p, n, lam, mu).

    Results are deterministic, so concurrent writers at worst duplicate
    work.  The store can be saved to and loaded from a plain JSON file.
    """

    def __init__(self):
        self._data: dict[tuple, dict[Partition, int]] = {}
        self._lock = threading.Lock()

    def get(self, p: int, n: int, lam: Partition, mu: Partition) -> dict[Partition, int]:
        key = (p, n, lam, mu) if lam <= mu else (p, n, mu, lam)
        hit = self._data.get(key)
        if hit is None:
            hit = _fuse_parts(p, n, key[2], key[3])
            with self._lock:
                self._data[key] = hit
        return hit

    def __len__(self) -> int:
        return len(self._data)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()

    def save(self, path) -> None:
        rows = [
            {"p": k[0], "n": k[1], "lam": list(k[2]), "mu": list(k[3]),
             "out": [[list(nu), c] for nu, c in v.items()]}
            for k, v in sorted(self._data.items())
        ]
        Path(path).write_text(json.dumps(rows))

    def load(self, path) -> None:
        path = Path(path)
        if not path.exists():
            return
        rows = json.loads(path.read_text())
        with self._lock:
            for r in rows:
                key = (r["p"], r["n"], tuple(r["lam"]), tuple(r["mu"]))
                self._data[key] = {tuple(nu): c for nu, c in r["out"]}


CACHE = FusionCache()


def _check_pair(a: AlcoveWeight, b: AlcoveWeight) -> None:
    if a.params != b.params:
        raise ValueError(f"mismatched parameters: {a.params} vs {b.params}")


def fuse_sln(lam: AlcoveWeight, mu: AlcoveWeight) -> FusionExpansion:
    _check_pair(lam, mu)
    pr = lam.params
    raw = CACHE.get(pr.p, pr.n, lam.parts, mu.parts)
    return {AlcoveWeight(pr, nu): c for nu, c in raw.items()}


def fuse_expansions(a: FusionExpansion, b: FusionExpansion) -> FusionExpansion:
    """Bilinear extension of fuse_sln to formal sums."""
    out: dict[AlcoveWeight, int] = {}
    for x, cx in a.items():
        for y, cy in b.items():
            for z, cz in fuse_sln(x, y).items():
                out[z] = out.get(z, 0) + cx * cy * cz
    return {k: v for k, v in out.items() if v}


def unit(params: SLnParams) -> AlcoveWeight:
    return AlcoveWeight(params, ())


def generator(params: SLnParams) -> AlcoveWeight:
    """The invertible simple T((p-n)) generating the pointed part."""
    return AlcoveWeight(params, (params.level,))


def alcove_dual(lam: AlcoveWeight) -> AlcoveWeight:
    """Dual simple -w0(lam): complement of the n-row padding inside the rectangle of width lam_1."""
    n = lam.params.n
    full = list(lam.parts) + [0] * (n - len(lam.parts))
    top = full[0]
    return AlcoveWeight(lam.params, tuple(top - full[n - 1 - i] for i in range(n)))


def invertible_action(lam: AlcoveWeight) -> AlcoveWeight:
    """Stack (p-n) on top of lam, then remove full columns of height n."""
    n = lam.params.n
    rows = [lam.params.level] + list(lam.parts) + [0] * (n - 1 - len(lam.parts))
    drop = rows[-1]
    return AlcoveWeight(lam.params, tuple(r - drop for r in rows))


def invertible_power(lam: AlcoveWeight, j: int) -> AlcoveWeight:
    for _ in range(j % lam.params.n):
        lam = invertible_action(lam)
    return lam


def is_plus(lam: AlcoveWeight) -> bool:
    return lam.size % lam.params.n == 0


def pointed_plus_factorize(lam: AlcoveWeight) -> tuple[int, AlcoveWeight]:
    """The unique (j, sigma) with sigma plus and invertible_action^j(sigma) == lam."""
    n = lam.params.n
    cur = lam
    for j in range(n):
        # cur = inverse action applied j times; inverse = (n-1)-fold action
        if is_plus(cur):
            return j, cur
        cur = invertible_power(cur, n - 1)
    raise ArithmeticError(f"no plus factor found for {lam}")


@lru_cache(maxsize=None)
def _qdim_parts(p: int, n: int, parts: Partition) -> CycNum:
    lam = list(parts) + [0] * (n - len(parts))
    x = [lam[i] + n - 1 - i for i in range(n)]
    num = CycNum.const(p, 1)
    den = CycNum.const(p, 1)
    for i in range(n):
        for j in range(i + 1, n):
            num = num * qint(x[i] - x[j], p)
            den = den * qint(j - i, p)
    return num / den


def qdim_sln(lam: AlcoveWeight) -> CycNum:
    """q-Weyl dimension: prod over positive roots of [<lam+rho, a>] / [<rho, a>]."""
    return _qdim_parts(lam.params.p, lam.params.n, lam.parts)


def qdim_expansion(e: FusionExpansion, p: int) -> CycNum:
    acc = CycNum.zero(p)
    for lam, c in e.items():
        acc = acc + qdim_sln(lam) * c
    return acc


def simple_count(params: SLnParams) -> int:
    return comb(params.p - 1, params.n - 1)


def plus_simples(params: SLnParams) -> list[AlcoveWeight]:
    return [w for w in enumerate_simples(params) if is_plus(w)]
