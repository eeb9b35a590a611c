from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from verpfusion import glx, verp
from verpfusion.glx import GWeight, SimpleIndex, build_shape
from verpfusion.verp import VerpObject

L = VerpObject.simple


def gw(shape, *entries):
    return GWeight(shape, tuple(entries))


GL2 = build_shape(5, (2, 0, 0, 0))
L2SQ = build_shape(5, (0, 2, 0, 0))
SHAPES = [
    build_shape(5, (1, 0, 0, 0)),
    build_shape(5, (1, 1, 0, 0)),
    build_shape(5, (2, 0, 1, 0)),
    build_shape(5, (0, 2, 0, 0)),
    build_shape(7, (1, 0, 2, 0, 0, 1)),
    build_shape(7, (3, 0, 0, 0, 0, 0)),
]


# -- shapes and roots -------------------------------------------------------------


def test_build_shape_examples():
    s = build_shape(5, (1, 0, 0, 0))
    assert s.n == 1 and s.summands == (1,) and s.is_ordinary()
    assert build_shape(5, (1, 1, 0, 0)).summands == (1, 2)
    s = build_shape(5, (2, 0, 1, 0))
    assert s.summands == (1, 1, 3) and s.n == 3 and not s.is_ordinary()
    assert s.blocks() == [(1, 0, 2), (3, 2, 1)]
    assert s.object() == L(5, 1, 2) + L(5, 3)
    assert build_shape(5, (2, 0)).mults == (2, 0, 0, 0)


def test_build_shape_errors():
    with pytest.raises(ValueError):
        build_shape(5, (0, 0, 0, 0))
    with pytest.raises(ValueError):
        build_shape(5, (1, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        build_shape(5, (-1, 1))
    with pytest.raises(ValueError):
        build_shape(6, (1,))


def test_weight_length_checked():
    with pytest.raises(ValueError):
        gw(GL2, 1, 2, 3)
    assert str(gw(build_shape(5, (2, 0, 1)), 12, 3, 0)) == "12,3|0"


def test_roots_examples():
    rs = glx.roots(L2SQ)
    assert len(rs) == 2 and {r.kind for r in rs} == {"ordinary"}
    rs = glx.roots(build_shape(5, (1, 1, 0, 0)))
    assert len(rs) == 2 and {r.kind for r in rs} == {"mixed"}
    rs = glx.roots(build_shape(5, (2, 0, 1, 0)))
    kinds = [r.kind for r in rs]
    assert len(rs) == 6 and kinds.count("ordinary") == 2 and kinds.count("mixed") == 4


@pytest.mark.parametrize("shape", SHAPES, ids=str)
def test_root_invariants(shape):
    rs = glx.roots(shape)
    n = shape.n
    assert len(rs) == n * (n - 1)
    for r in rs:
        assert (r.kind == "ordinary") == (shape.summands[r.i] == shape.summands[r.j])
        assert r.weight() == glx.epsilon(shape, r.i) - glx.epsilon(shape, r.j)
        assert r.positive == (r.i < r.j)
    assert [(r.i, r.j) for r in glx.simple_roots(shape)] == [(i, i + 1) for i in range(n - 1)]
    assert glx.gl_content(shape)[1] == sum(m * m for m in shape.mults)
    assert glx.gl_content(shape) == verp.fuse(shape.object(), shape.object())


def test_root_space_examples():
    s = build_shape(5, (0, 2, 0, 0))
    assert glx.root_space(s, glx.Root(s, 0, 1)) == L(5, 1) + L(5, 3)
    s = build_shape(5, (1, 0, 1, 0))
    assert glx.root_space(s, glx.Root(s, 0, 1)) == L(5, 3)
    s = build_shape(5, (0, 1, 1, 0))
    assert glx.root_space(s, glx.Root(s, 0, 1)) == L(5, 2) + L(5, 4)


def test_root_word():
    s = build_shape(5, (0, 1, 1, 0))
    assert glx.Root(s, 0, 1).word() == ("L2", "L3*")
    with pytest.raises(ValueError):
        glx.Root(s, 1, 1)


# -- dominance and p-adic decomposition -------------------------------------------


def test_dominance_restrictedness_examples():
    assert glx.is_dominant(gw(GL2, 7, 3)) and glx.is_restricted(gw(GL2, 7, 3))
    assert not glx.is_dominant(gw(GL2, 3, 7))
    lam = gw(GL2, 12, 3)
    assert glx.is_dominant(lam) and not glx.is_restricted(lam) and glx.is_restricted(lam, 2)
    gl1 = build_shape(5, (1, 1))
    assert glx.is_restricted(gw(gl1, 1000, -1000))


def test_padic_examples():
    assert glx.padic_decompose(gw(GL2, 12, 3)) == (gw(GL2, 7, 3), gw(GL2, 1, 0))
    assert glx.padic_decompose(gw(GL2, 0, -7)) == (gw(GL2, 5, 3), gw(GL2, -1, -2))
    assert glx.padic_decompose(gw(GL2, 4, 2)) == (gw(GL2, 4, 2), gw(GL2, 0, 0))
    with pytest.raises(ValueError):
        glx.padic_decompose(gw(GL2, 0, 1))


@st.composite
def dominant(draw, shapes=SHAPES):
    shape = draw(st.sampled_from(shapes))
    entries = []
    for _, _, m in shape.blocks():
        block = draw(st.lists(st.integers(-200, 200), min_size=m, max_size=m))
        entries.extend(sorted(block, reverse=True))
    return GWeight(shape, tuple(entries))


@settings(max_examples=300)
@given(dominant())
def test_padic_roundtrip(lam):
    p = lam.shape.p
    lam0, mu = glx.padic_decompose(lam)
    assert lam0 + mu.scale(p) == lam
    assert glx.is_restricted(lam0) and glx.is_dominant(mu)
    assert all(0 <= b[-1] < p for b in lam0.block_entries())


@settings(max_examples=200)
@given(dominant(), st.integers(-3, 3))
def test_padic_canonical_under_diagonal_shift(lam, c):
    # moving a diagonal p*(c,..,c) between lam0 and p*mu is absorbed by the normalization
    p = lam.shape.p
    lam0, mu = glx.padic_decompose(lam)
    diag = GWeight(lam.shape, (c,) * lam.shape.n)
    assert glx.padic_decompose(lam + diag.scale(p)) == (lam0, mu + diag)


# -- Steinberg factorization ------------------------------------------------------


def test_vtuple_validation():
    s = build_shape(7, (1, 0, 2))
    assert glx.trivial_vtuple(s) == (((),), ((), ()))
    v = glx.validate_vtuple(s, (((),), ((2, 1), ())))
    assert v == (((),), ((2, 1), ()))
    with pytest.raises(ValueError):
        glx.validate_vtuple(s, (((),), ((1,), ())))
    with pytest.raises(ValueError):
        glx.validate_vtuple(s, (((),), ((2, 1),)))
    with pytest.raises(ValueError):
        glx.validate_vtuple(s, (((1,),), ((), ())))


@pytest.mark.parametrize("p,k", [(p, k) for p in (5, 7, 11) for k in range(1, p)])
def test_vtuple_count(p, k):
    assert len(glx.plus_labels(p, k)) == glx.vtuple_count(p, k) == comb(p - 1, k - 1) // k


def test_step_examples():
    # plus labels for an L2 copy at p=5 are () and (2)
    v = (((2,), ()),)
    idx = SimpleIndex(gw(L2SQ, 12, 3), v)
    base, mu = glx.steinberg_step(idx)
    assert base == SimpleIndex(gw(L2SQ, 7, 3), v) and mu == gw(L2SQ, 1, 0)
    base, mu = glx.steinberg_step(SimpleIndex(gw(L2SQ, 0, -7), v))
    assert base.lam == gw(L2SQ, 5, 3) and base.V == v and mu == gw(L2SQ, -1, -2)
    r = SimpleIndex(gw(L2SQ, 4, 1), v)
    base, mu = glx.steinberg_step(r)
    assert base == r and mu.is_zero()


def test_factorize_examples():
    f = glx.steinberg_factorize(SimpleIndex(gw(GL2, 31, 0)))
    assert f.base.lam == gw(GL2, 1, 0) and f.twists == (gw(GL2, 1, 0), gw(GL2, 1, 0))
    f = glx.steinberg_factorize(SimpleIndex(gw(GL2, 12, 3)))
    assert f.base.lam == gw(GL2, 7, 3) and f.twists == (gw(GL2, 1, 0),)
    gl1 = build_shape(5, (1, 1, 0, 0))
    f = glx.steinberg_factorize(SimpleIndex(gw(gl1, 99, -4)))
    assert f.twists == () and f.base.lam == gw(gl1, 99, -4)


@settings(max_examples=300)
@given(dominant())
def test_factorize_reassembles(lam):
    idx = SimpleIndex(lam)
    f = glx.steinberg_factorize(idx)
    assert f.reassemble() == lam and f.base.V == idx.V
    assert all(glx.is_restricted(t) for t in f.twists)
    # one step then recurse on mu gives the same tower
    base, mu = glx.steinberg_step(idx)
    if f.twists:
        rest = glx.steinberg_factorize(SimpleIndex(mu))
        assert (rest.base.lam,) + rest.twists == f.twists
    assert glx.steinberg_factorize(f.base).twists == ()


@settings(max_examples=100)
@given(dominant(shapes=[GL2, build_shape(7, (2, 1))]))
def test_length_bookkeeping(lam):
    f = glx.steinberg_factorize(SimpleIndex(lam))
    ratio = glx.factorization_length_ratio(f)
    dims = [t.entries[0] - t.entries[1] + 1 for t in f.twists]
    want = 1
    for d in dims:
        want *= d
    assert ratio == want


# -- Frobenius kernels ------------------------------------------------------------


def test_frobkernel_examples():
    gl1 = build_shape(5, (1, 0, 0, 0))
    assert glx.frobkernel_equiv((gw(gl1, 0), None), (gw(gl1, 5), None), 1)
    assert not glx.frobkernel_equiv((gw(gl1, 0), None), (gw(gl1, 1), None), 1)
    assert glx.frobkernel_equiv((gw(GL2, 5, 0), None), (gw(GL2, 0, 0), None), 1)
    assert not glx.frobkernel_equiv((gw(GL2, 5, 0), None), (gw(GL2, 0, 0), None), 2)
    s = build_shape(5, (0, 2))
    assert not glx.frobkernel_equiv((gw(s, 0, 0), (((), ()),)), (gw(s, 0, 0), (((2,), ()),)), 1)
    with pytest.raises(ValueError):
        glx.frobkernel_equiv((gw(gl1, 0), None), (gw(GL2, 0, 0), None), 1)


@pytest.mark.parametrize("shape,r", [(build_shape(5, (1, 1)), 1), (build_shape(5, (2,)), 1), (build_shape(5, (1,)), 2)])
def test_frobkernel_class_count(shape, r):
    q = 5 ** r
    box = [GWeight(shape, e) for e in product(range(-q, q), repeat=shape.n)]
    reps = {glx.frobkernel_rep(x, r) for x in box}
    assert len(reps) == 5 ** (r * shape.n)
    for a, b in product(box[:40], box[:40]):
        assert glx.frobkernel_equiv((a, None), (b, None), r) == (glx.frobkernel_rep(a, r) == glx.frobkernel_rep(b, r))


# -- Harish-Chandra descriptors and kernel dimensions --------------------------------


def test_hc_pair_examples():
    x = build_shape(5, (0, 1))
    t = glx.hc_pair(x, "T")
    assert t.lie_algebra() == L(5, 1) + L(5, 3)
    assert glx.hc_pair(build_shape(5, (3,)), "N-").lie_algebra().is_zero() is False
    assert glx.hc_pair(x, "N-").lie_algebra().is_zero()
    s = build_shape(5, (1, 1))
    b, pp = glx.hc_pair(s, "B"), glx.hc_pair(s, "P")
    assert pp.lie_algebra() == b.lie_algebra()
    assert glx.hc_pair(s, "G").lie_algebra() == glx.gl_content(s)
    with pytest.raises(ValueError):
        glx.hc_pair(s, "Q")
    with pytest.raises(ValueError):
        glx.hc_pair(s, "kernel(0)")
    assert glx.hc_pair(s, "kernel(2)").level == 2


@pytest.mark.parametrize("shape", SHAPES, ids=str)
@pytest.mark.parametrize("sel", ["G", "T", "B", "N-", "P", "kernel(1)"])
def test_hc_pair_even_part_matches(shape, sel):
    assert glx.hc_pair(shape, sel).check()


def test_kernel_coord_dims_examples():
    assert glx.kernel_coord_dims(build_shape(5, (1,)), 1) == (1, [1])
    assert glx.kernel_coord_dims(build_shape(5, (0, 1)), 1) == (1, [1, 3, 1])
    assert glx.kernel_coord_dims(build_shape(5, (0, 1)), 3) == (3, [1, 3, 1])
    e, dims = glx.kernel_coord_dims(build_shape(5, (1, 1)), 1)
    assert e == 2
    assert glx.hc_pair(build_shape(5, (1, 1)), "G").odd_part() == L(5, 3) + L(5, 2, 2)
    # frozen from the direct Jordan computation of S^d(J_3 + J_2 + J_2)
    assert dims == [1, 7, 23, 39, 40, 39, 23, 7, 1]
    assert glx.kernel_coord_dims(build_shape(7, (3,)), 2) == (18, [1])
