"""Exact linear algebra over F_p on int64 numpy arrays.

All routines are deterministic Gaussian elimination; entries are kept
reduced into [0, p) so products stay far from int64 overflow for the
primes used here.
"""
from __future__ import annotations

import numpy as np


def as_fp(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivot columns)."""
    m = as_fp(a, p).copy()
    if m.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = m.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        col = m[:, c].copy()
        col[r] = 0
        m = (m - np.outer(col, m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a, p: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis (as rows) of {x : a @ x = 0} over F_p."""
    a = as_fp(a, p)
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    red, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = (-red[i, f]) % p
    return basis


def matpow_ranks(n: np.ndarray, p: int, upto: int) -> list[int]:
    """[rank(N^0), rank(N^1), ..., rank(N^upto)] over F_p."""
    n = as_fp(n, p)
    d = n.shape[0]
    ranks = [d]
    cur = np.eye(d, dtype=np.int64)
    for _ in range(upto):
        cur = (cur @ n) % p
        r = rank(cur, p)
        ranks.append(r)
        if r == 0:
            ranks.extend([0] * (upto + 1 - len(ranks)))
            break
    return ranks


def jordan_type_from_ranks(ranks: list[int]) -> dict[int, int]:
    """Block-size multiplicities of a nilpotent map from its power-rank sequence.

    ``#blocks of size >= s`` is ``ranks[s-1] - ranks[s]``.
    """
    at_least = [ranks[s - 1] - ranks[s] for s in range(1, len(ranks))] + [0]
    out = {}
    for s in range(1, len(ranks)):
        c = at_least[s - 1] - at_least[s]
        if c:
            out[s] = c
    return out


def jordan_type(n, p: int) -> dict[int, int]:
    n = as_fp(n, p)
    d = n.shape[0]
    if d == 0:
        return {}
    ranks = matpow_ranks(n, p, d)
    if ranks[-1] != 0:
        raise ValueError("matrix is not nilpotent over F_p")
    return jordan_type_from_ranks(ranks)
