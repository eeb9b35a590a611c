from itertools import product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from verpfusion.charoracle import LaurentChar, schur_char, weyl_dim
from verpfusion.lr import lr_coefficients, strip


def bialternant(m, mu):
    """Schur polynomial as det(x_i^(mu_j + m - j)) / Vandermonde, expanded by sympy."""
    xs = sympy.symbols(f"x0:{m}")
    mu = list(mu) + [0] * (m - len(mu))
    num = sympy.Matrix(m, m, lambda i, j: xs[i] ** (mu[j] + m - 1 - j)).det()
    van = sympy.Matrix(m, m, lambda i, j: xs[i] ** (m - 1 - j)).det()
    q = sympy.Poly(sympy.cancel(num / van), *xs)
    return LaurentChar(m, {k: int(v) for k, v in q.terms()})


def padded(mu, m):
    return tuple(mu) + (0,) * (m - len(mu))


def partitions_in_box(rows, cols):
    for parts in product(range(cols + 1), repeat=rows):
        if all(parts[i] >= parts[i + 1] for i in range(rows - 1)):
            yield strip(parts)


def test_known_expansion():
    # s21 * s21 (standard table value)
    assert lr_coefficients((2, 1), (2, 1)) == {
        (4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2,
        (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1,
    }


def test_pieri_and_unit():
    assert lr_coefficients((), (3, 1)) == {(3, 1): 1}
    assert lr_coefficients((2,), (1,)) == {(3,): 1, (2, 1): 1}
    assert lr_coefficients((1,), (1,), max_rows=1) == {(2,): 1}


@pytest.mark.parametrize("m", [2, 3])
def test_schur_char_matches_bialternant(m):
    for mu in partitions_in_box(m, 3):
        assert schur_char(m, padded(mu, m)) == bialternant(m, mu)


def test_schur_char_negative_entries_shift():
    c = schur_char(2, (1, -1))
    assert c == LaurentChar(2, {(1, -1): 1, (0, 0): 1, (-1, 1): 1})


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_weyl_dim_matches_character(m):
    for mu in partitions_in_box(m, 3):
        assert schur_char(m, padded(mu, m)).dim == weyl_dim(padded(mu, m))


@pytest.mark.parametrize("m", [2, 3])
def test_lr_matches_character_products(m):
    shapes = list(partitions_in_box(m, 2))
    for lam, mu in product(shapes, repeat=2):
        lhs = schur_char(m, padded(lam, m)) * schur_char(m, padded(mu, m))
        rhs = LaurentChar(m, {})
        for nu, c in lr_coefficients(lam, mu, max_rows=m).items():
            for _ in range(c):
                rhs = rhs + schur_char(m, padded(nu, m))
        assert lhs == rhs


part = st.lists(st.integers(0, 3), max_size=3).map(lambda xs: tuple(sorted(xs, reverse=True))).map(strip)


@settings(max_examples=60, deadline=None)
@given(part, part)
def test_lr_symmetric_and_size_preserving(lam, mu):
    out = lr_coefficients(lam, mu)
    assert out == lr_coefficients(mu, lam)
    assert all(sum(nu) == sum(lam) + sum(mu) for nu in out)
    # dimension count in 6 variables
    total = sum(c * weyl_dim(padded(nu, 6)) for nu, c in out.items())
    assert total == weyl_dim(padded(lam, 6)) * weyl_dim(padded(mu, 6))


@settings(max_examples=30, deadline=None)
@given(part, part, part)
def test_lr_associative(a, b, c):
    def times(expansion, x):
        out = {}
        for nu, k in expansion.items():
            for rho, j in lr_coefficients(nu, x).items():
                out[rho] = out.get(rho, 0) + k * j
        return out

    assert times(lr_coefficients(a, b), c) == times(lr_coefficients(b, c), a)
