"""The fusion ring of Ver_p(SL(n)) at p=7, n=3."""
from verpfusion import versln
from verpfusion.versln import SLnParams

pr = SLnParams(7, 3)
simples = versln.enumerate_simples(pr)
print(len(simples), "simples in the", pr.level, "x", pr.n - 1, "box")
print(" ".join(map(str, simples)))

# plus part: sizes divisible by n
plus = versln.plus_simples(pr)
print("\nplus part:", " ".join(map(str, plus)))

# the invertibles: powers of the generator (p-n)
g = versln.generator(pr)
orbit = [versln.invertible_power(versln.unit(pr), j) for j in range(pr.n)]
print("invertibles:", " ".join(map(str, orbit)))

# stacking agrees with fusion by g
lam = versln.weight(7, 3, (3, 1))
print(f"\n{g} x {lam} =", {str(k): v for k, v in versln.fuse_sln(g, lam).items()})
print("stacking gives", versln.invertible_action(lam))

# every simple = invertible^j . plus
for lam in simples[:8]:
    j, sigma = versln.pointed_plus_factorize(lam)
    print(f"{str(lam):>6} = g^{j} . {sigma}")

# a product with multiplicity
a, b = versln.weight(7, 3, (2, 1)), versln.weight(7, 3, (3, 1))
out = versln.fuse_sln(a, b)
print(f"\n{a} x {b} =", " + ".join(f"{c}*{k}" if c > 1 else str(k) for k, c in sorted(out.items(), key=lambda kv: kv[0].parts)))
print("qdim check:", versln.qdim_expansion(out, 7) == versln.qdim_sln(a) * versln.qdim_sln(b))
