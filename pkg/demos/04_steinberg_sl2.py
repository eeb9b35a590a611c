"""Classical Steinberg tensor product for SL(2) at p = 5, by brute force.

L(r + p s) is built as the simple quotient of a level-2 baby Verma module
and compared with L(r) (x) L(s)^[1].
"""
import numpy as np

from verpfusion import charoracle as co

p = 5

dims = np.zeros((p, p), dtype=int)
for lam in range(p * p):
    dims[lam // p, lam % p] = co.dist2_simple_sl2(lam, p).dim
print("dim L(r + 5s), rows s, columns r")
print(dims)
print("outer product (r+1)(s+1) matches:", np.array_equal(dims, np.outer(np.arange(1, p + 1), np.arange(1, p + 1))))

ok = [[co.steinberg_sl2_check(r, s, p) for r in range(p)] for s in range(p)]
print("\nsteinberg checks:")
print(np.array(ok, dtype=int))

m = co.dist2_simple_sl2(13, p)
print("\nweights of L(13):", sorted(m.character().elements(), reverse=True))
