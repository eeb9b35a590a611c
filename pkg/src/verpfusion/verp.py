"""The Grothendieck ring of the Verlinde category Ver_p.

Objects are multiplicity vectors over the simples L_1, ..., L_{p-1}.  The
second half of the module is the brute-force model: Jordan-block modules
over F_p[t]/(t^p), whose semisimplification (drop every block of size p)
lands back in Ver_p.  Jordan types are always read off rank sequences of
explicit nilpotent matrices, never from a closed formula.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, combinations
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .fplinalg import jordan_type
from .qcyclo import CycNum, check_prime, qint


@dataclass(frozen=True)
class VerpObject:
    """A finite direct sum of simples; ``mult[k-1]`` is the multiplicity of L_k."""

    p: int
    mult: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        if len(self.mult) != self.p - 1:
            raise ValueError(f"multiplicity vector must have length {self.p - 1}")
        if any((not isinstance(m, (int, np.integer))) or m < 0 for m in self.mult):
            raise ValueError("multiplicities must be non-negative integers")
        object.__setattr__(self, "mult", tuple(int(m) for m in self.mult))

    @classmethod
    def zero(cls, p: int) -> "VerpObject":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def simple(cls, p: int, k: int, m: int = 1) -> "VerpObject":
        if not 1 <= k <= p - 1:
            raise ValueError(f"simple index must lie in 1..{p - 1}, got {k}")
        mult = [0] * (p - 1)
        mult[k - 1] = m
        return cls(p, tuple(mult))

    @classmethod
    def from_dict(cls, p: int, d: Mapping[int, int]) -> "VerpObject":
        mult = [0] * (p - 1)
        for k, m in d.items():
            if not 1 <= k <= p - 1:
                raise ValueError(f"simple index must lie in 1..{p - 1}, got {k}")
            mult[k - 1] += m
        return cls(p, tuple(mult))

    def __getitem__(self, k: int) -> int:
        """Multiplicity of L_k (1-indexed)."""
        return self.mult[k - 1]

    def items(self):
        return [(k + 1, m) for k, m in enumerate(self.mult) if m]

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())

    def is_zero(self) -> bool:
        return not any(self.mult)

    def _check(self, other: "VerpObject") -> None:
        if not isinstance(other, VerpObject):
            raise TypeError(f"expected VerpObject, got {type(other).__name__}")
        if other.p != self.p:
            raise ValueError(f"mismatched p: {self.p} vs {other.p}")

    def __add__(self, other: "VerpObject") -> "VerpObject":
        self._check(other)
        return VerpObject(self.p, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __mul__(self, other: "VerpObject") -> "VerpObject":
        return fuse(self, other)

    def scale(self, c: int) -> "VerpObject":
        return VerpObject(self.p, tuple(c * m for m in self.mult))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"L{k}" if m == 1 else f"{m}*L{k}" for k, m in self.items())


def simple_fusion(p: int, m: int, n: int) -> list[int]:
    """Labels in L_m (x) L_n by the truncated Clebsch-Gordan rule."""
    top = min(m, n, p - m, p - n)
    return [abs(m - n) + 2 * i - 1 for i in range(1, top + 1)]


def fuse(a: VerpObject, b: VerpObject) -> VerpObject:
    a._check(b)
    p = a.p
    out = [0] * (p - 1)
    for m, x in a.items():
        for n, y in b.items():
            for k in simple_fusion(p, m, n):
                out[k - 1] += x * y
    return VerpObject(p, tuple(out))


def dual(a: VerpObject) -> VerpObject:
    # every simple is self-dual
    return a


def frobenius_twist(a: VerpObject) -> VerpObject:
    """Project onto the unit-isotypic component."""
    return VerpObject.simple(a.p, 1, a[1]) if a[1] else VerpObject.zero(a.p)


def qdim(a: VerpObject) -> CycNum:
    acc = CycNum.zero(a.p)
    for k, m in a.items():
        acc = acc + qint(k, a.p) * m
    return acc


def fpdim(a: VerpObject) -> int:
    """Categorical dimension in F_p, returned as a residue in [0, p)."""
    return sum(k * m for k, m in a.items()) % a.p


def underlying_dim(a: VerpObject) -> int:
    """Dimension of the Jordan-model lift, counting L_k as k."""
    return sum(k * m for k, m in a.items())


def length(a: VerpObject) -> int:
    return sum(a.mult)


class SuperSplit(NamedTuple):
    """``obj == even + fuse(odd, L_{p-1})`` with both parts in Ver_p^+."""

    even: VerpObject
    odd: VerpObject


def plus_parity(p: int, k: int) -> tuple[int, str]:
    """Write L_k as (plus simple, parity): L_k for odd k, L_{p-k} (x) L_{p-1} for even k."""
    check_prime(p)
    if not 1 <= k <= p - 1:
        raise ValueError(f"simple index must lie in 1..{p - 1}, got {k}")
    return (k, "even") if k % 2 else (p - k, "odd")


def split_plus_super(a: VerpObject) -> SuperSplit:
    even = [0] * (a.p - 1)
    odd = [0] * (a.p - 1)
    for k, m in a.items():
        j, parity = plus_parity(a.p, k)
        (even if parity == "even" else odd)[j - 1] += m
    return SuperSplit(VerpObject(a.p, tuple(even)), VerpObject(a.p, tuple(odd)))


def reassemble_super(split: SuperSplit) -> VerpObject:
    p = split.even.p
    return split.even + fuse(split.odd, VerpObject.simple(p, p - 1))


# -- Jordan model -----------------------------------------------------------


@dataclass(frozen=True)
class JordanModule:
    """A module over F_p[t]/(t^p), recorded by its Jordan block sizes."""

    p: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        if any(not 1 <= s <= self.p for s in self.blocks):
            raise ValueError(f"Jordan block sizes must lie in 1..{self.p}")
        object.__setattr__(self, "blocks", tuple(sorted((int(s) for s in self.blocks), reverse=True)))

    @classmethod
    def from_counts(cls, p: int, counts: Mapping[int, int]) -> "JordanModule":
        return cls(p, tuple(s for s, c in counts.items() for _ in range(c)))

    @property
    def dim(self) -> int:
        return sum(self.blocks)

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s in self.blocks:
            out[s] = out.get(s, 0) + 1
        return out

    def __add__(self, other: "JordanModule") -> "JordanModule":
        if other.p != self.p:
            raise ValueError(f"mismatched p: {self.p} vs {other.p}")
        return JordanModule(self.p, self.blocks + other.blocks)

    def matrix(self) -> np.ndarray:
        """The action of t: a direct sum of lower shift matrices (e_i -> e_{i+1})."""
        d = self.dim
        n = np.zeros((d, d), dtype=np.int64)
        start = 0
        for s in self.blocks:
            for i in range(s - 1):
                n[start + i + 1, start + i] = 1
            start += s
        return n

    def __str__(self) -> str:
        return " + ".join(f"J{s}" for s in self.blocks) or "0"


def _from_matrix(p: int, n: np.ndarray) -> JordanModule:
    return JordanModule.from_counts(p, jordan_type(n, p))


def tensor_jordan(a: JordanModule, b: JordanModule) -> JordanModule:
    """Jordan type of t(x)1 + 1(x)t on the tensor product, over F_p."""
    if a.p != b.p:
        raise ValueError(f"mismatched p: {a.p} vs {b.p}")
    if a.dim == 0 or b.dim == 0:
        return JordanModule(a.p, ())
    na, nb = a.matrix(), b.matrix()
    n = np.kron(na, np.eye(b.dim, dtype=np.int64)) + np.kron(np.eye(a.dim, dtype=np.int64), nb)
    return _from_matrix(a.p, n)


def _check_degree(a: JordanModule, d: int) -> None:
    if not 0 <= d < a.p:
        raise ValueError(
            f"symmetric/exterior powers need 0 <= d < p (got d={d}, p={a.p}); "
            "the (anti)symmetrizer idempotent is undefined otherwise"
        )


def sym_power_jordan(a: JordanModule, d: int) -> JordanModule:
    """Jordan type of t acting as a derivation on S^d.

    For d < p the symmetrizer is an idempotent, and its image is identified
    with the degree-d monomials; t acts on them by the Leibniz rule.
    """
    _check_degree(a, d)
    p = a.p
    if d == 0:
        return JordanModule(p, (1,))
    n = a.matrix()
    basis = list(combinations_with_replacement(range(a.dim), d))
    index = {m: i for i, m in enumerate(basis)}
    dmat = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for col, mono in enumerate(basis):
        for pos, i in enumerate(mono):
            for j in np.nonzero(n[:, i])[0]:
                new = tuple(sorted(mono[:pos] + (int(j),) + mono[pos + 1:]))
                dmat[index[new], col] += n[j, i]
    return _from_matrix(p, dmat % p)


def _sort_sign(seq: list[int]) -> tuple[int, tuple[int, ...]]:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign, tuple(seq)


def ext_power_jordan(a: JordanModule, d: int) -> JordanModule:
    """Jordan type of t acting as a derivation on the exterior power."""
    _check_degree(a, d)
    p = a.p
    if d == 0:
        return JordanModule(p, (1,))
    n = a.matrix()
    basis = list(combinations(range(a.dim), d))
    if not basis:
        return JordanModule(p, ())
    index = {m: i for i, m in enumerate(basis)}
    dmat = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for col, wedge in enumerate(basis):
        for pos, i in enumerate(wedge):
            for j in np.nonzero(n[:, i])[0]:
                j = int(j)
                if j in wedge[:pos] or j in wedge[pos + 1:]:
                    continue
                sign, new = _sort_sign(list(wedge[:pos]) + [j] + list(wedge[pos + 1:]))
                dmat[index[new], col] += sign * n[j, i]
    return _from_matrix(p, dmat % p)


def semisimplify(a: JordanModule) -> VerpObject:
    """J_k -> L_k for k < p; blocks of size p have dimension zero and vanish."""
    mult = [0] * (a.p - 1)
    for s in a.blocks:
        if s < a.p:
            mult[s - 1] += 1
    return VerpObject(a.p, tuple(mult))


def lift(a: VerpObject) -> JordanModule:
    """The Jordan module sum of m copies of J_k for each m*L_k in ``a``."""
    return JordanModule(a.p, tuple(k for k, m in a.items() for _ in range(m)))


@lru_cache(maxsize=None)
def _sym_series_simple(p: int, k: int) -> tuple[VerpObject, ...]:
    # S^{d+1}(L_k) is a summand of S^d(L_k) (x) L_k, so the first zero ends the series
    out = []
    for d in range(p):
        s = semisimplify(sym_power_jordan(JordanModule(p, (k,)), d))
        if s.is_zero():
            break
        out.append(s)
    return tuple(out)


def convolve(a: list[VerpObject], b: list[VerpObject]) -> list[VerpObject]:
    """Degreewise product of two graded objects: (a*b)_d = sum_{i+j=d} a_i (x) b_j."""
    if not a or not b:
        return []
    p = a[0].p
    out = [VerpObject.zero(p) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + fuse(x, y)
    while out and out[-1].is_zero():
        out.pop()
    return out


def sym_algebra_dims(a: VerpObject) -> list[VerpObject]:
    """Graded pieces S^0(a), S^1(a), ... up to the last nonzero degree.

    Only defined when ``a`` has no L_1 summand; otherwise the symmetric
    algebra is infinite.
    """
    if a[1]:
        raise ValueError("symmetric algebra is infinite when the object has an L_1 summand")
    series = [VerpObject.simple(a.p, 1)]
    for k, m in a.items():
        piece = list(_sym_series_simple(a.p, k))
        for _ in range(m):
            series = convolve(series, piece)
    return series


def simples(p: int) -> list[VerpObject]:
    return [VerpObject.simple(p, k) for k in range(1, p)]


def direct_sum(objs: Iterable[VerpObject], p: int) -> VerpObject:
    acc = VerpObject.zero(p)
    for o in objs:
        acc = acc + o
    return acc
