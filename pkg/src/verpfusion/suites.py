"""Property sweeps behind ``verpfusion verify``.

Each suite returns a :class:`SuiteResult`.  Exhaustive sweeps visit cases in
increasing order and stop at the first failure, so the reported
counterexample is the smallest one in that order.  Sampled sweeps draw from
``random.Random(seed)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Callable, Optional, Sequence

from . import glx, verp, versln
from .charoracle import (
    dist2_simple_sl2,
    steinberg_sl2_check,
    verify_factorization_chars,
)
from .qcyclo import qint

DEFAULT_PRIMES = (5, 7, 11, 13)
EXHAUSTIVE_SLN = ((5, 2), (5, 3), (7, 2), (7, 3), (7, 4))
SAMPLED_SLN = ((11, 3), (11, 4), (13, 3))


@dataclass
class SuiteResult:
    suite: str
    ok: bool = True
    checked: int = 0
    counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)

    def fail(self, **case) -> "SuiteResult":
        self.ok = False
        self.counterexample = case
        return self

    def as_dict(self) -> dict:
        out = {"suite": self.suite, "status": "ok" if self.ok else "property-violation",
               "checked": self.checked}
        if self.details:
            out["details"] = self.details
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def verp_oracle(primes: Sequence[int] = DEFAULT_PRIMES) -> SuiteResult:
    """semisimplify(J_m (x) J_n) == L_m (x) L_n for all m, n."""
    res = SuiteResult("verp-oracle")
    for p in primes:
        for m in range(1, p):
            for n in range(1, p):
                got = verp.semisimplify(verp.tensor_jordan(verp.JordanModule(p, (m,)), verp.JordanModule(p, (n,))))
                want = verp.fuse(verp.VerpObject.simple(p, m), verp.VerpObject.simple(p, n))
                res.checked += 1
                if got != want:
                    return res.fail(p=p, m=m, n=n, jordan=got.as_dict(), fusion=want.as_dict())
    return res


def qdim_hom(primes: Sequence[int] = DEFAULT_PRIMES) -> SuiteResult:
    """qdim and fpdim are ring maps on fuse; integer dimension m*n survives when m + n <= p."""
    res = SuiteResult("qdim-hom")
    for p in primes:
        for m in range(1, p):
            for n in range(1, p):
                a, b = verp.VerpObject.simple(p, m), verp.VerpObject.simple(p, n)
                ab = verp.fuse(a, b)
                res.checked += 1
                if verp.qdim(ab) != qint(m, p) * qint(n, p):
                    return res.fail(p=p, m=m, n=n, check="qdim")
                if verp.fpdim(ab) != (m * n) % p:
                    return res.fail(p=p, m=m, n=n, check="fpdim")
                if m + n <= p and verp.underlying_dim(ab) != m * n:
                    return res.fail(p=p, m=m, n=n, check="integer dimension")
    return res


def _assoc_case(a, b, c) -> bool:
    left = versln.fuse_expansions(versln.fuse_sln(a, b), {c: 1})
    right = versln.fuse_expansions({a: 1}, versln.fuse_sln(b, c))
    return left == right


def sln_ring(
    exhaustive: Sequence[tuple[int, int]] = EXHAUSTIVE_SLN,
    sampled: Sequence[tuple[int, int]] = SAMPLED_SLN,
    samples: int = 500,
    seed: int = 0,
) -> SuiteResult:
    """Associativity, commutativity, unit, duality multiplicity, mod-n grading, q-dimension map."""
    res = SuiteResult("sln-ring")
    rng = random.Random(seed)
    for p, n in list(exhaustive) + list(sampled):
        pr = versln.SLnParams(p, n)
        simples = versln.enumerate_simples(pr)
        one = versln.unit(pr)
        full = (p, n) in set(map(tuple, exhaustive))
        for a in simples:
            if versln.fuse_sln(one, a) != {a: 1}:
                return res.fail(p=p, n=n, lam=str(a), check="unit")
            for b in simples:
                ab = versln.fuse_sln(a, b)
                res.checked += 1
                if ab != versln.fuse_sln(b, a):
                    return res.fail(p=p, n=n, lam=str(a), mu=str(b), check="commutativity")
                want = 1 if b == versln.alcove_dual(a) else 0
                if ab.get(one, 0) != want:
                    return res.fail(p=p, n=n, lam=str(a), mu=str(b), check="duality")
                for nu in ab:
                    if (nu.size - a.size - b.size) % n:
                        return res.fail(p=p, n=n, lam=str(a), mu=str(b), nu=str(nu), check="grading")
                if full and versln.qdim_expansion(ab, p) != versln.qdim_sln(a) * versln.qdim_sln(b):
                    return res.fail(p=p, n=n, lam=str(a), mu=str(b), check="qdim")
        if full:
            triples = product(simples, repeat=3)
        else:
            triples = [tuple(rng.choice(simples) for _ in range(3)) for _ in range(samples)]
        count = 0
        for a, b, c in triples:
            count += 1
            if not _assoc_case(a, b, c):
                return res.fail(p=p, n=n, triple=[str(a), str(b), str(c)], check="associativity")
        res.details[f"{p},{n}"] = {"simples": len(simples), "triples": count}
        res.checked += count
    return res


def sln_count(pairs: Sequence[tuple[int, int]] = EXHAUSTIVE_SLN) -> SuiteResult:
    res = SuiteResult("sln-count")
    for p, n in pairs:
        pr = versln.SLnParams(p, n)
        simples = versln.enumerate_simples(pr)
        plus = versln.plus_simples(pr)
        res.checked += 1
        res.details[f"{p},{n}"] = {"simples": len(simples), "plus": len(plus)}
        if len(simples) != comb(p - 1, n - 1) or len(plus) * n != comb(p - 1, n - 1):
            return res.fail(p=p, n=n, simples=len(simples), plus=len(plus))
    return res


def dictionary(primes: Sequence[int] = (5, 7, 11)) -> SuiteResult:
    """fuse_sln at n = 2 matches the truncated Clebsch-Gordan rule under L_k <-> (k-1)."""
    res = SuiteResult("dictionary")
    for p in primes:
        pr = versln.SLnParams(p, 2)
        for m in range(1, p):
            for n in range(1, p):
                got = versln.fuse_sln(versln.AlcoveWeight(pr, (m - 1,)), versln.AlcoveWeight(pr, (n - 1,)))
                got = {(w.parts[0] if w.parts else 0) + 1: c for w, c in got.items()}
                want = verp.fuse(verp.VerpObject.simple(p, m), verp.VerpObject.simple(p, n)).as_dict()
                res.checked += 1
                if got != want:
                    return res.fail(p=p, m=m, n=n, sln=got, verp=want)
    return res


def stacking(pairs: Sequence[tuple[int, int]] = EXHAUSTIVE_SLN) -> SuiteResult:
    """The column-deletion stacking rule agrees with fusion by the generator (p-n)."""
    res = SuiteResult("stacking")
    for p, n in pairs:
        pr = versln.SLnParams(p, n)
        gen = versln.generator(pr)
        for lam in versln.enumerate_simples(pr):
            res.checked += 1
            got = versln.fuse_sln(gen, lam)
            want = versln.invertible_action(lam)
            if got != {want: 1}:
                return res.fail(p=p, n=n, lam=str(lam), fusion={str(k): v for k, v in got.items()},
                                stacking=str(want))
            if versln.invertible_power(lam, n) != lam:
                return res.fail(p=p, n=n, lam=str(lam), check="order n")
            j, sigma = versln.pointed_plus_factorize(lam)
            if not versln.is_plus(sigma) or versln.invertible_power(sigma, j) != lam:
                return res.fail(p=p, n=n, lam=str(lam), check="pointed-plus")
    return res


DEFAULT_SHAPES = (
    (5, (2,)),
    (5, (1, 1)),
    (5, (2, 0, 1)),
    (7, (3,)),
    (7, (1, 2, 0, 1)),
    (11, (0, 2, 0, 0, 3)),
)


def random_dominant(shape: glx.GLXShape, rng: random.Random, spread: int) -> glx.GWeight:
    entries = []
    for _, _, m in shape.blocks():
        top = rng.randint(-spread, spread)
        block = [top]
        for _ in range(m - 1):
            block.append(block[-1] - rng.randint(0, spread))
        entries.extend(block)
    return glx.GWeight(shape, tuple(entries))


def padic(samples: int = 10_000, seed: int = 0, shapes=DEFAULT_SHAPES) -> SuiteResult:
    """lam0 + p*mu == lam, lam0 restricted, mu dominant, canonical form unique."""
    res = SuiteResult("padic")
    rng = random.Random(seed)
    built = [glx.build_shape(p, m) for p, m in shapes]
    for t in range(samples):
        shape = built[t % len(built)]
        p = shape.p
        lam = random_dominant(shape, rng, spread=p ** 3)
        lam0, mu = glx.padic_decompose(lam)
        res.checked += 1
        case = dict(shape=str(shape), lam=str(lam), lam0=str(lam0), mu=str(mu))
        if lam0 + mu.scale(p) != lam:
            return res.fail(check="round trip", **case)
        if not glx.is_restricted(lam0) or not glx.is_dominant(mu):
            return res.fail(check="restricted/dominant", **case)
        if any(not 0 <= b[-1] < p for b in lam0.block_entries()):
            return res.fail(check="canonical", **case)
        # any other valid split shifts a block by a multiple of p; it must leave [0, p)
        shift = rng.choice([-1, 1])
        alt = glx.GWeight(shape, tuple(x + shift * p for x in lam0.entries))
        if all(0 <= b[-1] < p for b in alt.block_entries()):
            return res.fail(check="uniqueness", **case)
    return res


def factorize(samples: int = 10_000, seed: int = 0, shapes=DEFAULT_SHAPES) -> SuiteResult:
    """Reassembly, identity on restricted indices, and step-then-recurse consistency."""
    res = SuiteResult("factorize")
    rng = random.Random(seed)
    built = [glx.build_shape(p, m) for p, m in shapes]
    for t in range(samples):
        shape = built[t % len(built)]
        p = shape.p
        lam = random_dominant(shape, rng, spread=p ** 3)
        idx = glx.SimpleIndex(lam)
        f = glx.steinberg_factorize(idx)
        res.checked += 1
        case = dict(shape=str(shape), lam=str(lam))
        if f.reassemble() != lam:
            return res.fail(check="reassembly", **case)
        if glx.steinberg_factorize(f.base) != glx.Factorization(f.base, ()):
            return res.fail(check="identity on restricted base", **case)
        base, mu = glx.steinberg_step(idx)
        if base.lam != f.base.lam:
            return res.fail(check="step base", **case)
        if not mu.is_zero():
            rest = glx.steinberg_factorize(glx.SimpleIndex(mu))
            if (rest.base.lam,) + rest.twists != f.twists:
                return res.fail(check="step then recurse", **case)
    return res


def sl2_steinberg(p: int = 5) -> SuiteResult:
    """dim L(lam) == (lam0+1)(lam1+1) and L(r) (x) L(s)^[1] == L(r + p*s) for all r, s < p."""
    res = SuiteResult("sl2-steinberg")
    for lam in range(p * p):
        res.checked += 1
        lam0, lam1 = lam % p, lam // p
        d = dist2_simple_sl2(lam, p).dim
        if d != (lam0 + 1) * (lam1 + 1):
            return res.fail(p=p, lam=lam, dim=d)
    pairs = 0
    for r in range(p):
        for s in range(p):
            res.checked += 1
            pairs += 1
            if not steinberg_sl2_check(r, s, p):
                return res.fail(p=p, r=r, s=s)
    res.details["pairs"] = pairs
    return res


def factor_chars(p: int = 5, low: int = -2, high: int = 2) -> SuiteResult:
    """Character identity ch L(lam) == ch L(lam0) * dilate(ch L(mu)) on GL(1), GL(2) blocks."""
    res = SuiteResult("factor-chars")
    for shape in (glx.build_shape(p, (1,)), glx.build_shape(p, (2,))):
        if shape.n == 1:
            weights = [glx.GWeight(shape, (a,)) for a in range(-p * p, p * p)]
        else:
            weights = [glx.GWeight(shape, (b + d, b)) for b in range(low, high + 1) for d in range(p * p)]
        for lam in weights:
            res.checked += 1
            if not verify_factorization_chars(shape, glx.SimpleIndex(lam)):
                return res.fail(p=p, shape=str(shape), lam=str(lam))
    return res


def kernel_dims(rmax: int = 2, mmax: int = 3, primes: Sequence[int] = (5, 7)) -> SuiteResult:
    """Ordinary X = L_1^m gives p^(r m^2); mixed shapes agree with a direct Jordan computation."""
    res = SuiteResult("kernel-dims")
    for p in primes:
        for m in range(1, mmax + 1):
            for r in range(1, rmax + 1):
                res.checked += 1
                e, dims = glx.kernel_coord_dims(glx.build_shape(p, (m,)), r)
                if e != r * m * m or dims != [1]:
                    return res.fail(p=p, m=m, r=r, exponent=e, dims=dims)
    for p, mults in ((5, (0, 1)), (5, (1, 1))):
        shape = glx.build_shape(p, mults)
        res.checked += 1
        odd = glx.hc_pair(shape, "kernel(1)").odd_part()
        series = verp.sym_algebra_dims(odd)
        direct = sym_series_direct(odd)
        padded = series + [verp.VerpObject.zero(p)] * max(0, p - len(series))
        if padded[:p] != direct:
            return res.fail(p=p, shape=str(shape), check="direct Jordan symmetric powers")
        res.details[str(shape)] = list(glx.kernel_coord_dims(shape, 1))
    return res


def sym_series_direct(obj: verp.VerpObject) -> list[verp.VerpObject]:
    """S^d(obj) for d < p from one Jordan computation on the whole lift (no splitting)."""
    lifted = verp.lift(obj)
    return [verp.semisimplify(verp.sym_power_jordan(lifted, d)) for d in range(obj.p)]


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "verp-oracle": verp_oracle,
    "qdim-hom": qdim_hom,
    "sln-ring": sln_ring,
    "sln-count": sln_count,
    "dictionary": dictionary,
    "stacking": stacking,
    "padic": padic,
    "factorize": factorize,
    "sl2-steinberg": sl2_steinberg,
    "kernel-dims": kernel_dims,
    "factor-chars": factor_chars,
}
