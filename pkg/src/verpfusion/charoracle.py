"""Brute-force character oracle for the even (classical) part of the Steinberg factorization.

Modules over the restricted enveloping algebra of sl_2, and over the
divided-power algebra of its second Frobenius kernel, are built as explicit
matrices over F_p.  Simple modules are obtained as quotients of baby Verma
modules by repeatedly collapsing the submodule generated by a singular
vector.  None of this uses the tensor product theorem it is checking.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb, factorial
from typing import Mapping, Optional

import numpy as np

from .fplinalg import nullspace, rref
from .glx import (
    Factorization,
    GLXShape,
    GWeight,
    SimpleIndex,
    steinberg_factorize,
)
from .lr import strip
from .qcyclo import check_prime


# -- Laurent characters ---------------------------------------------------------


@dataclass(frozen=True)
class LaurentChar:
    """Formal character sum_w m_w x^w in ``nvars`` variables, keyed by exponent tuples."""

    nvars: int
    terms: Mapping[tuple[int, ...], int]

    def __post_init__(self):
        clean = {}
        for k, v in self.terms.items():
            k = tuple(int(x) for x in k)
            if len(k) != self.nvars:
                raise ValueError(f"exponent {k} has wrong length for {self.nvars} variables")
            if v < 0:
                raise ValueError("characters have non-negative multiplicities")
            if v:
                clean[k] = clean.get(k, 0) + int(v)
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))

    @classmethod
    def monomial(cls, exps) -> "LaurentChar":
        exps = tuple(exps)
        return cls(len(exps), {exps: 1})

    def __mul__(self, other: "LaurentChar") -> "LaurentChar":
        if other.nvars != self.nvars:
            raise ValueError("characters in different numbers of variables")
        out: dict[tuple[int, ...], int] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = tuple(i + j for i, j in zip(a, b))
                out[k] = out.get(k, 0) + x * y
        return LaurentChar(self.nvars, out)

    def __add__(self, other: "LaurentChar") -> "LaurentChar":
        if other.nvars != self.nvars:
            raise ValueError("characters in different numbers of variables")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentChar(self.nvars, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentChar):
            return NotImplemented
        return self.nvars == other.nvars and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.nvars, tuple(self.terms.items())))

    @property
    def dim(self) -> int:
        return sum(self.terms.values())


def dilate(c: LaurentChar, p: int) -> LaurentChar:
    """Character of a Frobenius twist: every exponent is multiplied by p."""
    return LaurentChar(c.nvars, {tuple(p * e for e in k): v for k, v in c.terms.items()})


def _ssyt_contents(shape: tuple[int, ...], m: int):
    """Contents of all semistandard tableaux of ``shape`` with entries 1..m (via horizontal strips)."""
    if m == 0:
        if not shape:
            yield ()
        return
    if len(shape) > m:
        return
    rows = list(shape)
    # remove the horizontal strip of m's: inner shape interlaces the outer one
    bounds = [(rows[i + 1] if i + 1 < len(rows) else 0, rows[i]) for i in range(len(rows))]

    def rec(i: int, acc: list[int]):
        if i == len(rows):
            inner = strip(acc)
            removed = sum(rows) - sum(inner)
            for rest in _ssyt_contents(inner, m - 1):
                yield rest + (removed,)
            return
        lo, hi = bounds[i]
        for v in range(lo, hi + 1):
            acc.append(v)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def schur_char(m: int, mu) -> LaurentChar:
    """Weyl character of GL(m) with highest weight mu (entries may be negative)."""
    mu = tuple(int(x) for x in mu)
    if len(mu) != m or m < 1:
        raise ValueError(f"need a weight with {m} entries")
    if any(mu[i] < mu[i + 1] for i in range(m - 1)):
        raise ValueError(f"{mu} is not dominant")
    shift = mu[-1]
    shape = strip(x - shift for x in mu)
    terms: dict[tuple[int, ...], int] = {}
    for content in _ssyt_contents(shape, m):
        k = tuple(c + shift for c in content)
        terms[k] = terms.get(k, 0) + 1
    return LaurentChar(m, terms)


def weyl_dim(mu) -> int:
    """Weyl dimension formula for GL(m): prod_{i<j} (mu_i - mu_j + j - i) / (j - i)."""
    m = len(mu)
    num = den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= mu[i] - mu[j] + j - i
            den *= j - i
    return num // den


# -- sl_2 modules over F_p ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SL2Module:
    """A weight module for the (level-1 or level-2) divided-power algebra of sl_2.

    ``raising[a]`` and ``lowering[a]`` are the matrices of e^(a) and f^(a) in a
    basis of weight vectors with integer weights ``weights``.  Level 1 only
    stores a = 1; level 2 stores a in 1..p-1 and a = p.
    """

    p: int
    weights: tuple[int, ...]
    raising: Mapping[int, np.ndarray]
    lowering: Mapping[int, np.ndarray]
    highest: Optional[int] = None
    level: int = 1

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def e(self) -> np.ndarray:
        return self.raising[1]

    @property
    def f(self) -> np.ndarray:
        return self.lowering[1]

    @property
    def h(self) -> np.ndarray:
        return np.diag(np.array(self.weights, dtype=np.int64) % self.p)

    def ops(self) -> list[np.ndarray]:
        return list(self.raising.values()) + list(self.lowering.values())

    def character(self) -> Counter:
        """Multiset of integer h-weights."""
        return Counter(self.weights)

    def check_relations(self, restricted: bool = False) -> None:
        """Assert the sl_2 bracket relations (and p-th power relations if ``restricted``)."""
        p = self.p
        e, f, h = self.e, self.f, self.h
        comm = lambda x, y: (x @ y - y @ x) % p
        if not (np.array_equal(comm(h, e), (2 * e) % p)
                and np.array_equal(comm(h, f), (-2 * f) % p)
                and np.array_equal(comm(e, f), h % p)):
            raise AssertionError("sl_2 bracket relations fail")
        if restricted and self.dim:
            ep = _powmod(e, p, p)
            fp_ = _powmod(f, p, p)
            hp = _powmod(h, p, p)
            if ep.any() or fp_.any() or not np.array_equal(hp, h % p):
                raise AssertionError("restricted relations e^p = f^p = 0, h^p = h fail")


def _powmod(a: np.ndarray, k: int, p: int) -> np.ndarray:
    out = np.eye(a.shape[0], dtype=np.int64)
    for _ in range(k):
        out = (out @ a) % p
    return out


def _gbinom(x: int, a: int) -> int:
    """Binomial coefficient binom(x, a) for any integer x."""
    num = 1
    for i in range(a):
        num *= x - i
    return num // factorial(a)


def baby_verma_sl2(r: int, p: int) -> SL2Module:
    """The p-dimensional baby Verma module Z(r) with basis f^i v."""
    check_prime(p)
    e = np.zeros((p, p), dtype=np.int64)
    f = np.zeros((p, p), dtype=np.int64)
    for i in range(1, p):
        e[i - 1, i] = (i * (r - i + 1)) % p
        f[i, i - 1] = 1
    return SL2Module(p, tuple(r - 2 * i for i in range(p)), {1: e}, {1: f}, highest=r, level=1)


def baby_verma_level2(lam: int, p: int) -> SL2Module:
    """Level-2 baby Verma with basis f^(i) v, 0 <= i < p^2, and divided-power action.

    f^(a) f^(i) v = binom(a+i, a) f^(a+i) v and
    e^(a) f^(i) v = binom(lam - i + a, a) f^(i-a) v (Kostant's commutation formula on v).
    """
    check_prime(p)
    d = p * p
    gens = list(range(1, p)) + [p]
    raising, lowering = {}, {}
    for a in gens:
        e = np.zeros((d, d), dtype=np.int64)
        f = np.zeros((d, d), dtype=np.int64)
        for i in range(d):
            if i + a < d:
                f[i + a, i] = comb(a + i, a) % p
            if i >= a:
                e[i - a, i] = _gbinom(lam - i + a, a) % p
        raising[a] = e
        lowering[a] = f
    return SL2Module(p, tuple(lam - 2 * i for i in range(d)), raising, lowering, highest=lam, level=2)


def _projector(sub: np.ndarray, pivots: list[int], d: int, p: int) -> np.ndarray:
    """Matrix of v -> v mod span(sub), normalised to vanish on pivot coordinates."""
    r = np.eye(d, dtype=np.int64)
    if len(pivots):
        sel = np.zeros((len(pivots), d), dtype=np.int64)
        for j, c in enumerate(pivots):
            sel[j, c] = 1
        r = (r - sub.T @ sel) % p
    return r


def _closure(vectors: np.ndarray, ops: list[np.ndarray], p: int, d: int) -> tuple[np.ndarray, list[int]]:
    """Row-reduced basis of the submodule generated by ``vectors``."""
    if vectors.size == 0:
        return np.zeros((0, d), dtype=np.int64), []
    sub, piv = rref(vectors, p)
    while True:
        images = [sub] + [(a @ sub.T).T % p for a in ops]
        new, newpiv = rref(np.vstack(images), p)
        if len(newpiv) == len(piv):
            return sub, piv
        sub, piv = new, newpiv


def _weight_spaces(weights) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for i, w in enumerate(weights):
        out.setdefault(w, []).append(i)
    return out


def _singular_vectors(m: SL2Module, sub: np.ndarray, piv: list[int], skip_weight=None) -> np.ndarray:
    """Weight vectors outside ``sub`` that every raising operator sends into ``sub``."""
    p, d = m.p, m.dim
    proj = _projector(sub, piv, d, p)
    found = []
    stacked = np.vstack([(proj @ a) % p for a in m.raising.values()])
    for w, idx in _weight_spaces(m.weights).items():
        if w == skip_weight:
            continue
        ker = nullspace(stacked[:, idx], p)
        for row in ker:
            v = np.zeros(d, dtype=np.int64)
            v[idx] = row
            if ((proj @ v) % p).any():
                found.append(v)
    return np.array(found, dtype=np.int64).reshape(-1, d)


def simple_quotient(m: SL2Module) -> SL2Module:
    """Quotient of a highest-weight module by its maximal submodule.

    Repeatedly finds a singular vector (below the top weight) in the current
    quotient and adds the submodule it generates; stops when none is left.
    """
    p, d = m.p, m.dim
    sub = np.zeros((0, d), dtype=np.int64)
    piv: list[int] = []
    ops = m.ops()
    while True:
        sing = _singular_vectors(m, sub, piv, skip_weight=m.highest)
        if sing.size == 0:
            break
        sub, piv = _closure(np.vstack([sub, sing[:1]]), ops, p, d)
        if 0 in piv:
            raise ArithmeticError("collapsed the highest weight vector: module is not highest-weight")
    keep = [c for c in range(d) if c not in set(piv)]
    proj = _projector(sub, piv, d, p)
    sel = np.ix_(keep, keep)
    raising = {a: ((proj @ x) % p)[sel] for a, x in m.raising.items()}
    lowering = {a: ((proj @ x) % p)[sel] for a, x in m.lowering.items()}
    out = SL2Module(p, tuple(m.weights[c] for c in keep), raising, lowering, m.highest, m.level)
    out.check_relations(restricted=(m.level == 1))
    return out


def restricted_simple_sl2(r: int, p: int) -> SL2Module:
    """The simple restricted module L(r), 0 <= r <= p-1, as a quotient of Z(r)."""
    check_prime(p)
    if not 0 <= r <= p - 1:
        raise ValueError(f"restricted highest weight must lie in 0..{p - 1}, got {r}")
    z = baby_verma_sl2(r, p)
    z.check_relations(restricted=True)
    return simple_quotient(z)


def dist2_simple_sl2(lam: int, p: int) -> SL2Module:
    """Simple module of highest weight lam over the level-2 divided-power algebra."""
    check_prime(p)
    if not 0 <= lam < p * p:
        raise ValueError(f"level-2 highest weight must lie in 0..{p * p - 1}, got {lam}")
    z = baby_verma_level2(lam, p)
    z.check_relations()
    return simple_quotient(z)


def direct_sum(a: SL2Module, b: SL2Module) -> SL2Module:
    if a.p != b.p or set(a.raising) != set(b.raising):
        raise ValueError("incompatible modules")

    def blk(x, y):
        out = np.zeros((x.shape[0] + y.shape[0],) * 2, dtype=np.int64)
        out[:x.shape[0], :x.shape[0]] = x
        out[x.shape[0]:, x.shape[0]:] = y
        return out

    return SL2Module(
        a.p, a.weights + b.weights,
        {k: blk(a.raising[k], b.raising[k]) for k in a.raising},
        {k: blk(a.lowering[k], b.lowering[k]) for k in a.lowering},
        None, a.level,
    )


def u_simplicity_check(m: SL2Module) -> bool:
    """Is ``m`` simple?

    Every basis weight vector must generate the whole module, and the space
    of singular vectors must be a single line (a proper submodule always
    contains one; a simple module cannot have two independent ones).
    """
    p, d = m.p, m.dim
    if d == 0:
        return False
    ops = m.ops()
    for i in range(d):
        v = np.zeros((1, d), dtype=np.int64)
        v[0, i] = 1
        if len(_closure(v, ops, p, d)[1]) != d:
            return False
    raise_stack = np.vstack(list(m.raising.values()))
    singular = nullspace(raise_stack, p)
    if singular.shape[0] != 1:
        return False
    return len(_closure(singular, ops, p, d)[1]) == d


def _divided_matrix(x: np.ndarray, a: int, p: int) -> np.ndarray:
    """x^a / a! over F_p for 0 <= a < p."""
    return (_powmod(x, a, p) * pow(factorial(a), -1, p)) % p


def steinberg_product(r: int, s: int, p: int) -> SL2Module:
    """L(r) (x) L(s)^[1] as a level-2 module.

    e^(a), a < p, acts on the first factor only; e^(p) acts as e on the
    twisted factor.  e^(p) vanishes on L(r) since its weights span < 2p.
    """
    left = restricted_simple_sl2(r, p)
    right = restricted_simple_sl2(s, p)
    dl, dr = left.dim, right.dim
    il, ir = np.eye(dl, dtype=np.int64), np.eye(dr, dtype=np.int64)
    raising, lowering = {}, {}
    for a in range(1, p):
        raising[a] = np.kron(_divided_matrix(left.e, a, p), ir) % p
        lowering[a] = np.kron(_divided_matrix(left.f, a, p), ir) % p
    raising[p] = np.kron(il, right.e) % p
    lowering[p] = np.kron(il, right.f) % p
    weights = tuple(wl + p * wr for wl in left.weights for wr in right.weights)
    return SL2Module(p, weights, raising, lowering, highest=r + p * s, level=2)


def steinberg_sl2_check(r: int, s: int, p: int) -> bool:
    """Compare L(r) (x) L(s)^[1] with the level-2 simple L(r + p*s) computed from scratch."""
    if not (0 <= r < p and 0 <= s < p):
        raise ValueError("need 0 <= r, s < p")
    prod = steinberg_product(r, s, p)
    prod.check_relations()
    target = dist2_simple_sl2(r + p * s, p)
    return (
        u_simplicity_check(prod)
        and prod.dim == target.dim
        and prod.character() == target.character()
    )


# -- characters of GL(1) / GL(2) blocks ------------------------------------------------


def _gl2_char_from_sl2(m: SL2Module, a: int, b: int) -> LaurentChar:
    """Character of L(a, b) = L(a - b) (x) det^b from the h-weights of L(a - b)."""
    s = a + b
    return LaurentChar(2, {((s + w) // 2, (s - w) // 2): c for w, c in m.character().items()})


def _block_char(entries, restricted_only: bool, p: int) -> LaurentChar:
    if len(entries) == 1:
        return LaurentChar.monomial(entries)
    a, b = entries
    if restricted_only:
        return _gl2_char_from_sl2(restricted_simple_sl2(a - b, p), a, b)
    return _gl2_char_from_sl2(dist2_simple_sl2(a - b, p), a, b)


def _weight_char(lam: GWeight, restricted_only: bool) -> LaurentChar:
    blocks = lam.block_entries()
    # a supported shape has exactly one block (X = L_1 or L_1^2)
    return _block_char(blocks[0], restricted_only, lam.shape.p)


def _check_supported(shape: GLXShape) -> None:
    if not shape.is_ordinary() or shape.n > 2:
        raise ValueError(f"character check supports X = L1 or L1^2 only, got {shape}")


def factorization_char(f: Factorization) -> LaurentChar:
    """ch L(base) * prod_i dilate^i(ch L(twist_i)), from restricted simples only."""
    _check_supported(f.base.shape)
    p = f.base.shape.p
    out = _weight_char(f.base.lam, True)
    for i, t in enumerate(f.twists, start=1):
        c = _weight_char(t, True)
        for _ in range(i):
            c = dilate(c, p)
        out = out * c
    return out


def direct_char(idx: SimpleIndex) -> LaurentChar:
    """ch L(lam) from the level-2 radical computation (in-block difference < p^2)."""
    _check_supported(idx.shape)
    p = idx.shape.p
    for b in idx.lam.block_entries():
        if len(b) == 2 and b[0] - b[1] >= p * p:
            raise ValueError("in-block difference must be < p^2 for the level-2 oracle")
    return _weight_char(idx.lam, False)


def verify_factorization_chars(shape: GLXShape, idx: SimpleIndex) -> bool:
    """ch L(lam) == ch L(lam0) * dilate(ch L(mu)) on ordinary shapes with blocks of size <= 2."""
    _check_supported(shape)
    if idx.shape != shape:
        raise ValueError("index does not live on the given shape")
    return direct_char(idx) == factorization_char(steinberg_factorize(idx))
