# Weights of GL(X) and the Steinberg factorization of labels.
from verpfusion import glx
from verpfusion.glx import GWeight, SimpleIndex

X = glx.build_shape(5, (2, 1))          # X = L1^2 + L2
print("X =", X, " summands", X.summands)

for r in glx.roots(X):
    print(f"  root ({r.i},{r.j}) {r.kind:8s} space {glx.root_space(X, r)}")
print("gl(X) =", glx.gl_content(X))

lam = GWeight(X, (31, 0, 7))
print("\nlam =", lam, "dominant:", glx.is_dominant(lam), "restricted:", glx.is_restricted(lam))
lam0, mu = glx.padic_decompose(lam)
print("lam0 =", lam0, " mu =", mu)

f = glx.steinberg_factorize(SimpleIndex(lam))
print("base", f.base.lam, "twists", [str(t) for t in f.twists])
print("reassembled:", f.reassemble())

# V labels ride along with the base
Y = glx.build_shape(7, (0, 0, 2))
print("\nplus labels for an L3 copy at p=7:", glx.plus_labels(7, 3))
idx = SimpleIndex(GWeight(Y, (60, 2)), (((2, 1), ()),))
f = glx.steinberg_factorize(idx)
print("V =", f.base.V, " twists", [str(t) for t in f.twists])
