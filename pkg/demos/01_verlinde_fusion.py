# Fusion in Ver_p, computed two ways.
import numpy as np

from verpfusion import verp
from verpfusion.verp import JordanModule, VerpObject

p = 7

# fusion table: entry [m-1, n-1] lists the simples in L_m (x) L_n
for m in range(1, p):
    row = [str(verp.fuse(VerpObject.simple(p, m), VerpObject.simple(p, n))) for n in range(1, p)]
    print(f"L{m}:", " | ".join(row))

# same thing from nilpotent matrices: J_m (x) J_n over F_p, drop the J_p blocks
a, b = JordanModule(p, (3,)), JordanModule(p, (5,))
t = verp.tensor_jordan(a, b)
print("\nJ3 (x) J5 blocks:", t.blocks)
print("semisimplified:", verp.semisimplify(t))

# the nilpotent itself, if you want to look at it
n = np.kron(a.matrix(), np.eye(5, dtype=int)) + np.kron(np.eye(3, dtype=int), b.matrix())
print("nilpotent matrix shape", n.shape)

# quantum dimensions are q-integers; real values are sin(k pi/p)/sin(pi/p)
q = [verp.qdim(VerpObject.simple(p, k)).to_float() for k in range(1, p)]
print("\nqdims:", np.round(q, 4))
print("sum of squares:", round(sum(x * x for x in q), 6))

# fpdim: the dimension mod p
print("fpdim(L3 x L5) =", verp.fpdim(verp.fuse(VerpObject.simple(p, 3), VerpObject.simple(p, 5))))
