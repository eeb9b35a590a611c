"""Acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line each.
"""
import time
from itertools import product

import pytest

from verpfusion import glx, suites, verp

EXHAUSTIVE = suites.EXHAUSTIVE_SLN


def report(n, title: str, ok: bool, detail: str = "") -> None:
    print(f"\n[criterion {n!s:>3}] {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else ""))


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def test_c01_fusion_oracle():
    res, dt = timed(suites.verp_oracle, (5, 7, 11, 13))
    ok = res.ok and dt < 30
    report(1, "Jordan semisimplification == truncated CG fusion, p in 5,7,11,13",
           ok, f"{res.checked} pairs, {dt:.1f}s")
    assert res.ok, res.counterexample
    assert dt < 30


def test_c02_dimension_homomorphisms():
    res = suites.qdim_hom((5, 7, 11, 13))
    report(2, "qdim/fpdim ring maps; sum = m*n when m+n <= p", res.ok, f"{res.checked} pairs")
    assert res.ok, res.counterexample


def test_c03_sln_ring_axioms():
    res, dt = timed(suites.sln_ring, EXHAUSTIVE, suites.SAMPLED_SLN, samples=500, seed=0)
    sampled = [res.details[f"{p},{n}"]["triples"] for p, n in suites.SAMPLED_SLN] if res.ok else []
    ok = res.ok and dt < 120 and all(t >= 500 for t in sampled)
    report(3, "Ver_p(SL(n)) associativity, unit, duality, grading", ok, f"{res.checked} checks, {dt:.1f}s")
    assert ok, res.counterexample


def test_c04_counting():
    res = suites.sln_count(EXHAUSTIVE)
    ok = res.ok and res.details["5,3"] == {"simples": 6, "plus": 2}
    report(4, "|simples| = C(p-1,n-1), |plus| = C(p-1,n-1)/n", ok, str(res.details))
    assert ok, res.counterexample


def test_c05_n2_dictionary():
    res = suites.dictionary((5, 7, 11))
    report(5, "fuse_sln at n=2 matches verp.fuse under L_k <-> (k-1)", res.ok, f"{res.checked} pairs")
    assert res.ok, res.counterexample


def test_c06_stacking_rule():
    res = suites.stacking(EXHAUSTIVE)
    report(6, "stacking rule == fusion with the generator", res.ok, f"{res.checked} simples")
    assert res.ok, res.counterexample


def test_c07_padic_roundtrip():
    a = suites.padic(samples=10_000, seed=0)
    b = suites.factorize(samples=10_000, seed=0)
    ok = a.ok and b.ok and len(suites.DEFAULT_SHAPES) >= 5
    report(7, "p-adic round trip and factorization reassembly on 10^4 weights", ok,
           f"{a.checked} + {b.checked} samples over {len(suites.DEFAULT_SHAPES)} shapes")
    assert a.ok, a.counterexample
    assert b.ok, b.counterexample


def test_c08_classical_steinberg():
    res, dt = timed(suites.sl2_steinberg, 5)
    ok = res.ok and res.details.get("pairs") == 25 and dt < 60
    report(8, "dist2 dims (l0+1)(l1+1) and L(r) x L(s)^[1] == L(r+ps), p=5", ok, f"{dt:.1f}s")
    assert ok, res.counterexample


@pytest.mark.slow
def test_c08_classical_steinberg_p7():
    res = suites.sl2_steinberg(7)
    report("8+", "slow extension at p=7 (49 pairs)", res.ok)
    assert res.ok and res.details["pairs"] == 49, res.counterexample


def test_c09_factorization_characters():
    res = suites.factor_chars(5, -2, 2)
    gl2 = res.checked - 2 * 25
    ok = res.ok and gl2 >= 100
    report(9, "ch L(lam) == ch L(lam0) * dilate(ch L(mu)) on GL(1), GL(2)", ok, f"{gl2} GL(2) weights")
    assert ok, res.counterexample


def test_c10_kernel_dimensions():
    ordinary = all(
        glx.kernel_coord_dims(glx.build_shape(p, (m,)), r) == (r * m * m, [1])
        for p in (5, 7) for m in (1, 2, 3) for r in (1, 2)
    )
    consistent = True
    for mults in ((0, 1), (1, 1)):
        shape = glx.build_shape(5, mults)
        first = glx.kernel_coord_dims(shape, 1)
        verp._sym_series_simple.cache_clear()
        second = glx.kernel_coord_dims(shape, 1)
        # S(A + B) = S(A) * S(B) degreewise, factors computed directly on Jordan lifts
        # (degrees < p only); the product is taken on objects since Jordan dimension
        # is not multiplicative
        odd = glx.hc_pair(shape, "G").odd_part()
        conv = [verp.VerpObject.simple(5, 1)]
        for k, m in odd.items():
            conv = verp.convolve(conv, suites.sym_series_direct(verp.VerpObject.simple(5, k, m)))
        conv_dims = [verp.underlying_dim(x) for x in conv[:5]]
        consistent &= first == second and first[1][:5] == conv_dims + [0] * (len(first[1][:5]) - len(conv_dims))
    direct = suites.kernel_dims()
    ok = ordinary and consistent and direct.ok
    report(10, "kernel coordinate dims: p^(r m^2) ordinary; convolution-consistent mixed", ok,
           f"L1+L2 at p=5: {glx.kernel_coord_dims(glx.build_shape(5, (1, 1)), 1)}")
    assert ok, direct.counterexample


@pytest.mark.skip(reason=(
    "the V-component isomorphism needs a module engine for group schemes in Ver_p; "
    "only index bookkeeping (criteria 4, 7) and the length invariant are checked"
))
def test_c11_v_component_not_reproducible():
    pass


def test_c11_boundary_recorded():
    # what is checked in place of criterion 11: the length-consistency invariant
    gl2 = glx.build_shape(5, (2,))
    ok = True
    for a, b in product(range(0, 60, 7), range(-10, 1, 5)):
        f = glx.steinberg_factorize(glx.SimpleIndex(glx.GWeight(gl2, (a + b, b))))
        want = 1
        for t in f.twists:
            want *= t.entries[0] - t.entries[1] + 1
        ok &= glx.factorization_length_ratio(f) == want
    report(11, "V-component boundary recorded as a documented skip", ok,
           "isomorphism itself not verified; length bookkeeping only")
    assert ok
