"""Exact arithmetic in the 2p-th cyclotomic field Q(zeta), zeta = exp(i*pi/p).

Elements are stored as rational coefficient vectors in the power basis
1, zeta, ..., zeta^(p-2), reduced modulo the 2p-th cyclotomic polynomial
Phi_2p(x) = 1 - x + x^2 - ... + x^(p-1).
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Number = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def check_prime(p: int) -> int:
    """Validate that ``p`` is an odd prime >= 5 and return it."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 5 or not is_prime(p):
        raise ValueError(f"p must be an odd prime >= 5, got {p!r}")
    return p


def _reduce(p: int, poly: dict[int, Fraction]) -> tuple[Fraction, ...]:
    # zeta^p = -1, then zeta^(p-1) = -(sum_{i<p-1} (-1)^i zeta^i)
    out = [Fraction(0)] * (p - 1)
    for e, c in poly.items():
        if not c:
            continue
        e %= 2 * p
        if e >= p:
            e -= p
            c = -c
        if e < p - 1:
            out[e] += c
        else:
            for i in range(p - 1):
                out[i] -= c * (-1) ** i
    return tuple(out)


@dataclass(frozen=True)
class CycNum:
    p: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p - 1:
            raise ValueError("coefficient vector must have length p - 1")

    @classmethod
    def from_exponents(cls, p: int, terms: dict[int, Number]) -> "CycNum":
        """Build sum(c * zeta^e) for a mapping ``e -> c`` (any integer e)."""
        return cls(p, _reduce(p, {e: Fraction(c) for e, c in terms.items()}))

    @classmethod
    def const(cls, p: int, c: Number) -> "CycNum":
        return cls.from_exponents(p, {0: c})

    @classmethod
    def zero(cls, p: int) -> "CycNum":
        return cls(p, (Fraction(0),) * (p - 1))

    def _check(self, other: "CycNum") -> None:
        if not isinstance(other, CycNum):
            raise TypeError(f"expected CycNum, got {type(other).__name__}")
        if other.p != self.p:
            raise ValueError(f"mismatched p: {self.p} vs {other.p}")

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycNum.const(self.p, other)
        self._check(other)
        return other

    def __add__(self, other) -> "CycNum":
        other = self._coerce(other)
        return CycNum(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "CycNum":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CycNum":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CycNum":
        other = self._coerce(other)
        prod: dict[int, Fraction] = {}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] = prod.get(i + j, Fraction(0)) + a * b
        return CycNum(self.p, _reduce(self.p, prod))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CycNum":
        other = self._coerce(other)
        q = _solve(other, self)
        if q * other != self:
            raise ArithmeticError("inexact cyclotomic division")
        return q

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = CycNum.const(self.p, other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_float(self) -> float:
        """Real part of the value at zeta = exp(i*pi/p). Display only."""
        z = cmath.exp(1j * cmath.pi / self.p)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs)).real

    def __repr__(self) -> str:
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"CycNum(p={self.p}, {' + '.join(terms) or '0'})"


def _solve(a: CycNum, b: CycNum) -> CycNum:
    """Solve a * x = b by Gaussian elimination on the multiplication matrix of a."""
    p = a.p
    d = p - 1
    if a.is_zero():
        raise ZeroDivisionError("division by zero in cyclotomic field")
    # column k of M is a * zeta^k
    cols = [(a * CycNum.from_exponents(p, {k: 1})).coeffs for k in range(d)]
    rows = [[cols[k][i] for k in range(d)] + [b.coeffs[i]] for i in range(d)]
    r = 0
    pivots = []
    for c in range(d):
        piv = next((i for i in range(r, d) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(d):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    x = [Fraction(0)] * d
    for i, c in enumerate(pivots):
        x[c] = rows[i][d]
    return CycNum(p, tuple(x))


@lru_cache(maxsize=None)
def qint(n: int, p: int) -> CycNum:
    """The quantum integer [n] = sum_{j<n} zeta^(n-1-2j) at the 2p-th root of unity."""
    check_prime(p)
    if n < 0:
        raise ValueError(f"qint needs n >= 0, got {n}")
    terms: dict[int, int] = {}
    for j in range(n):
        e = n - 1 - 2 * j
        terms[e] = terms.get(e, 0) + 1
    return CycNum.from_exponents(p, terms)


def add(a: CycNum, b: CycNum) -> CycNum:
    a._check(b)
    return a + b


def mul(a: CycNum, b: CycNum) -> CycNum:
    a._check(b)
    return a * b


def is_zero(a: CycNum) -> bool:
    return a.is_zero()


def to_float(a: CycNum) -> float:
    return a.to_float()


def total(values: Iterable[CycNum], p: int) -> CycNum:
    acc = CycNum.zero(p)
    for v in values:
        acc = acc + v
    return acc
