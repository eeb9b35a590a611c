# Dimensions of O(G_(r)) for a few shapes: p^e times the graded symmetric algebra.
from verpfusion import glx, verp

p = 5
for mults in [(1,), (2,), (0, 1), (1, 1), (0, 0, 1), (1, 0, 1)]:
    X = glx.build_shape(p, mults)
    e, dims = glx.kernel_coord_dims(X, 1)
    g = glx.hc_pair(X, "G")
    print(f"X={str(X):10s} g_0 dim {g.lie_algebra()[1]}, g_!=0 = {g.odd_part()!s:12s} "
          f"p^{e} * {dims}  (sym total {sum(dims)})")

# the symmetric powers of one simple stop at degree p - k
for k in range(2, p):
    print(f"S(L{k}) =", [str(x) for x in verp.sym_algebra_dims(verp.VerpObject.simple(p, k))])
