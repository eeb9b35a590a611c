"""Weight and root combinatorics of GL(X) for X = sum_k L_k^{n_k} in Ver_p.

The even part of GL(X) is prod_k GL(n_k); weights are integer vectors of
length n = sum n_k cut into blocks of sizes n_k.  Simple modules are
labelled by a dominant weight together with a tuple of plus-part alcove
weights, and the Steinberg engine peels a dominant weight into restricted
pieces, one per Frobenius twist.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional, Sequence

from . import verp
from .qcyclo import check_prime
from .verp import VerpObject
from .versln import AlcoveWeight, SLnParams, is_plus


@dataclass(frozen=True)
class GLXShape:
    p: int
    mults: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        mults = tuple(int(m) for m in self.mults)
        if len(mults) > self.p - 1:
            raise ValueError(f"at most {self.p - 1} multiplicities allowed")
        mults = mults + (0,) * (self.p - 1 - len(mults))
        if any(m < 0 for m in mults):
            raise ValueError("multiplicities must be non-negative")
        if not any(mults):
            raise ValueError("X must be nonzero: some n_k must be positive")
        object.__setattr__(self, "mults", mults)

    @property
    def n(self) -> int:
        return sum(self.mults)

    @property
    def summands(self) -> tuple[int, ...]:
        """Simple labels X_1, ..., X_n with isomorphic summands consecutive."""
        return tuple(k for k, m in enumerate(self.mults, start=1) for _ in range(m))

    def blocks(self) -> list[tuple[int, int, int]]:
        """(label k, start index, size n_k) for every k with n_k > 0."""
        out = []
        start = 0
        for k, m in enumerate(self.mults, start=1):
            if m:
                out.append((k, start, m))
                start += m
        return out

    def object(self) -> VerpObject:
        return VerpObject(self.p, self.mults)

    def is_ordinary(self) -> bool:
        return all(m == 0 for m in self.mults[1:])

    def __str__(self) -> str:
        return ",".join(f"L{k}:{m}" for k, _, m in self.blocks())


def build_shape(p: int, mults: Sequence[int]) -> GLXShape:
    return GLXShape(p, tuple(mults))


@dataclass(frozen=True)
class GWeight:
    shape: GLXShape
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != self.shape.n:
            raise ValueError(f"weight needs {self.shape.n} entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    def block_entries(self) -> list[tuple[int, ...]]:
        return [self.entries[s:s + m] for _, s, m in self.shape.blocks()]

    def __add__(self, other: "GWeight") -> "GWeight":
        _same_shape(self, other)
        return GWeight(self.shape, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "GWeight") -> "GWeight":
        _same_shape(self, other)
        return GWeight(self.shape, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c: int) -> "GWeight":
        return GWeight(self.shape, tuple(c * a for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.block_entries())


def _same_shape(a, b) -> None:
    if a.shape != b.shape:
        raise ValueError(f"mismatched shapes: {a.shape} vs {b.shape}")


def zero_weight(shape: GLXShape) -> GWeight:
    return GWeight(shape, (0,) * shape.n)


def epsilon(shape: GLXShape, i: int) -> GWeight:
    e = [0] * shape.n
    e[i] = 1
    return GWeight(shape, tuple(e))


# -- roots ---------------------------------------------------------------------


@dataclass(frozen=True)
class Root:
    """The root eps_i - eps_j (0-indexed summands) with its root-space label."""

    shape: GLXShape
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j or not (0 <= self.i < self.shape.n and 0 <= self.j < self.shape.n):
            raise ValueError(f"invalid root indices ({self.i}, {self.j})")

    @property
    def kind(self) -> str:
        s = self.shape.summands
        return "ordinary" if s[self.i] == s[self.j] else "mixed"

    @property
    def positive(self) -> bool:
        return self.i < self.j

    @property
    def is_simple(self) -> bool:
        return self.j == self.i + 1

    def weight(self) -> GWeight:
        return epsilon(self.shape, self.i) - epsilon(self.shape, self.j)

    def word(self) -> tuple[str, ...]:
        """Tensor word 1 x ... x X_i x ... x X_j^* x ... x 1."""
        s = self.shape.summands
        w = ["1"] * self.shape.n
        w[self.i] = f"L{s[self.i]}"
        w[self.j] = f"L{s[self.j]}*"
        return tuple(w)


def roots(shape: GLXShape) -> list[Root]:
    return [Root(shape, i, j) for i in range(shape.n) for j in range(shape.n) if i != j]


def simple_roots(shape: GLXShape) -> list[Root]:
    return [Root(shape, i, i + 1) for i in range(shape.n - 1)]


def root_space(shape: GLXShape, root: Root) -> VerpObject:
    """X_i (x) X_j^*, which is X_i (x) X_j since simples are self-dual."""
    s = shape.summands
    p = shape.p
    return verp.fuse(VerpObject.simple(p, s[root.i]), VerpObject.simple(p, s[root.j]))


def diagonal_space(shape: GLXShape, i: int) -> VerpObject:
    """gl(X_i), the i-th diagonal summand of the torus Lie algebra."""
    k = shape.summands[i]
    return verp.fuse(VerpObject.simple(shape.p, k), VerpObject.simple(shape.p, k))


def gl_content(shape: GLXShape) -> VerpObject:
    acc = VerpObject.zero(shape.p)
    for i in range(shape.n):
        acc = acc + diagonal_space(shape, i)
    for r in roots(shape):
        acc = acc + root_space(shape, r)
    return acc


# -- dominance and restrictedness ---------------------------------------------


def is_dominant(lam: GWeight) -> bool:
    return all(b[i] >= b[i + 1] for b in lam.block_entries() for i in range(len(b) - 1))


def is_restricted(lam: GWeight, r: int = 1) -> bool:
    """Every in-block consecutive difference lies in [0, p^r)."""
    if r < 1:
        raise ValueError("restrictedness level must be positive")
    bound = lam.shape.p ** r
    return all(0 <= b[i] - b[i + 1] < bound for b in lam.block_entries() for i in range(len(b) - 1))


def padic_decompose(lam: GWeight) -> tuple[GWeight, GWeight]:
    """Canonical (lam0, mu) with lam = lam0 + p*mu, lam0 restricted, mu dominant.

    Normalisation: the last entry of each block of lam0 lies in [0, p).
    """
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    p = lam.shape.p
    lam0: list[int] = []
    mu: list[int] = []
    for b in lam.block_entries():
        m = len(b)
        l0 = [0] * m
        u = [0] * m
        l0[-1] = b[-1] % p
        u[-1] = (b[-1] - l0[-1]) // p
        for i in range(m - 2, -1, -1):
            q, rem = divmod(b[i] - b[i + 1], p)
            l0[i] = l0[i + 1] + rem
            u[i] = u[i + 1] + q
        lam0.extend(l0)
        mu.extend(u)
    return GWeight(lam.shape, tuple(lam0)), GWeight(lam.shape, tuple(mu))


# -- simple-module indices -----------------------------------------------------


VTuple = tuple  # per nonzero block: tuple of n_k partitions (empty tuples for k = 1)


def trivial_vtuple(shape: GLXShape) -> VTuple:
    return tuple(tuple(() for _ in range(m)) for _, _, m in shape.blocks())


def plus_labels(p: int, k: int) -> list[tuple[int, ...]]:
    """Valid per-copy labels for an L_k summand: plus simples of Ver_p(SL(k))."""
    if k == 1:
        return [()]
    from .versln import enumerate_simples

    return [w.parts for w in enumerate_simples(SLnParams(p, k)) if is_plus(w)]


def validate_vtuple(shape: GLXShape, v: VTuple) -> VTuple:
    blocks = shape.blocks()
    if len(v) != len(blocks):
        raise ValueError(f"V needs one entry per nonzero block ({len(blocks)}), got {len(v)}")
    out = []
    for (k, _, m), comp in zip(blocks, v):
        comp = tuple(tuple(int(x) for x in lab) for lab in comp)
        if len(comp) != m:
            raise ValueError(f"block L{k} needs {m} labels, got {len(comp)}")
        for lab in comp:
            if k == 1:
                if any(lab):
                    raise ValueError("L1 blocks only admit the trivial label")
                continue
            w = AlcoveWeight(SLnParams(shape.p, k), lab)
            if not is_plus(w):
                raise ValueError(f"label {w} for L{k} is not in the plus part")
        out.append(tuple(tuple(x for x in lab if x) if k > 1 else () for lab in comp))
    return tuple(out)


@dataclass(frozen=True)
class SimpleIndex:
    lam: GWeight
    V: VTuple = None

    def __post_init__(self):
        if not is_dominant(self.lam):
            raise ValueError(f"{self.lam} is not dominant")
        v = trivial_vtuple(self.lam.shape) if self.V is None else self.V
        object.__setattr__(self, "V", validate_vtuple(self.lam.shape, v))

    @property
    def shape(self) -> GLXShape:
        return self.lam.shape


def steinberg_step(idx: SimpleIndex) -> tuple[SimpleIndex, GWeight]:
    """L(lam + p*mu, V) = L(lam, V) (x) Fr(L_0(mu)): split off one twist level."""
    if is_restricted(idx.lam):
        return idx, zero_weight(idx.shape)
    lam0, mu = padic_decompose(idx.lam)
    return SimpleIndex(lam0, idx.V), mu


@dataclass(frozen=True)
class Factorization:
    base: SimpleIndex
    twists: tuple[GWeight, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not is_restricted(self.base.lam):
            raise ValueError("base weight must be restricted")
        for t in self.twists:
            if not is_restricted(t):
                raise ValueError(f"twist weight {t} is not restricted")

    def reassemble(self) -> GWeight:
        p = self.base.shape.p
        total = self.base.lam
        for i, t in enumerate(self.twists, start=1):
            total = total + t.scale(p ** i)
        return total


def steinberg_factorize(idx: SimpleIndex) -> Factorization:
    base, mu = steinberg_step(idx)
    if base is idx:
        return Factorization(idx, ())
    twists = []
    while not is_restricted(mu):
        mu0, mu = padic_decompose(mu)
        twists.append(mu0)
    twists.append(mu)
    return Factorization(base, tuple(twists))


def even_simple_dim(mu: GWeight) -> int:
    """dim L_0(mu) for a restricted weight of an even group whose blocks are GL(1) or GL(2).

    A restricted GL(2) weight with difference d < p gives the (d+1)-dimensional
    restricted simple; larger blocks are not supported.
    """
    if not is_restricted(mu):
        raise ValueError(f"{mu} is not restricted")
    dim = 1
    for b in mu.block_entries():
        if len(b) > 2:
            raise NotImplementedError("simple dimensions only tracked for blocks of size <= 2")
        if len(b) == 2:
            dim *= b[0] - b[1] + 1
    return dim


def factorization_length_ratio(f: Factorization) -> int:
    """length(L(lam, V)) / length(L(base)): product of the inflated even factors' dimensions."""
    out = 1
    for t in f.twists:
        out *= even_simple_dim(t)
    return out


def frobkernel_equiv(a: tuple[GWeight, VTuple], b: tuple[GWeight, VTuple], r: int) -> bool:
    """Do (lam, V) and (mu, W) label isomorphic simples of the r-th Frobenius kernel?"""
    (lam, v), (mu, w) = a, b
    _same_shape(lam, mu)
    if r < 1:
        raise ValueError("kernel level must be positive")
    q = lam.shape.p ** r
    v = validate_vtuple(lam.shape, trivial_vtuple(lam.shape) if v is None else v)
    w = validate_vtuple(mu.shape, trivial_vtuple(mu.shape) if w is None else w)
    return all((x - y) % q == 0 for x, y in zip(lam.entries, mu.entries)) and v == w


def frobkernel_rep(lam: GWeight, r: int) -> GWeight:
    """Canonical class representative: entries reduced into [0, p^r)."""
    q = lam.shape.p ** r
    return GWeight(lam.shape, tuple(x % q for x in lam.entries))


# -- Harish-Chandra descriptors ---------------------------------------------------


SELECTORS = ("G", "T", "B", "N-", "P")

_EVEN_DIM = {
    "GL": lambda m: m * m,
    "upper": lambda m: m * (m + 1) // 2,
    "diag": lambda m: m,
    "lower-unipotent": lambda m: m * (m - 1) // 2,
}


@dataclass(frozen=True)
class HCPair:
    """Descriptor of a subgroup of GL(X): even group plus Lie algebra content.

    ``content`` maps ('diag', i) or ('root', i, j) to the Ver_p object of that
    piece of gl(X).
    """

    shape: GLXShape
    selector: str
    even: tuple[tuple[str, int], ...]
    content: dict
    level: Optional[int] = None

    def lie_algebra(self) -> VerpObject:
        return verp.direct_sum(self.content.values(), self.shape.p)

    def even_dim(self) -> int:
        return sum(_EVEN_DIM[kind](m) for kind, m in self.even)

    def odd_part(self) -> VerpObject:
        """The non-unit part Lie(G)_{!=0}: content with the L_1 summands removed."""
        g = self.lie_algebra()
        return VerpObject(g.p, (0,) + g.mult[1:])

    def check(self) -> bool:
        """Unit-isotypic part of the content matches the even Lie algebra dimension."""
        return self.lie_algebra()[1] == self.even_dim()


def _parse_selector(selector: str) -> tuple[str, Optional[int]]:
    if selector in SELECTORS:
        return selector, None
    if selector.startswith("kernel(") and selector.endswith(")"):
        r = int(selector[7:-1])
        if r < 1:
            raise ValueError("kernel level must be positive")
        return "kernel", r
    raise ValueError(f"unknown selector {selector!r}; expected one of {SELECTORS} or kernel(r)")


def hc_pair(shape: GLXShape, selector: str) -> HCPair:
    kind, level = _parse_selector(selector)
    s = shape.summands
    blocks = [m for _, _, m in shape.blocks()]
    if kind in ("G", "P", "kernel"):
        even_kind, keep = "GL", lambda r: kind != "P" or r.positive or s[r.i] == s[r.j]
    elif kind == "T":
        even_kind, keep = "diag", lambda r: False
    elif kind == "B":
        even_kind, keep = "upper", lambda r: r.positive
    else:
        even_kind, keep = "lower-unipotent", lambda r: not r.positive
    content = {}
    if kind != "N-":
        for i in range(shape.n):
            content[("diag", i)] = diagonal_space(shape, i)
    for r in roots(shape):
        if keep(r):
            content[("root", r.i, r.j)] = root_space(shape, r)
    return HCPair(shape, selector, tuple((even_kind, m) for m in blocks), content, level)


def kernel_coord_dims(shape: GLXShape, r: int) -> tuple[int, list[int]]:
    """Factored dimension of the coordinate ring of the r-th Frobenius kernel.

    Returns (e, dims): the even factor has dimension p^e with e = r * dim g_0,
    and dims[d] is the Jordan-model dimension of S^d(g_{!=0}).
    """
    if r < 1:
        raise ValueError("kernel level must be positive")
    pair = hc_pair(shape, f"kernel({r})")
    g0 = pair.lie_algebra()[1]
    series = verp.sym_algebra_dims(pair.odd_part())
    return r * g0, [verp.underlying_dim(x) for x in series]


def vtuple_count(p: int, k: int) -> int:
    """Expected number of plus labels for one L_k copy: C(p-1, k-1) / k."""
    return comb(p - 1, k - 1) // k


def dominant_weights(shape: GLXShape, lo: int, hi: int) -> Iterator[GWeight]:
    """Dominant weights with all entries in [lo, hi]."""
    from itertools import combinations_with_replacement, product

    per_block = [
        [tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(lo, hi + 1), m)]
        for _, _, m in shape.blocks()
    ]
    for combo in product(*per_block):
        yield GWeight(shape, tuple(x for b in combo for x in b))
