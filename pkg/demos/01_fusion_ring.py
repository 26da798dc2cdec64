"""Tour of the fusion-ring arithmetic underlying all mass computations.

The coefficients of every mass matrix live in a fusion ring with basis
[Pi_0], ..., [Pi_{n-2}] and Chebyshev-flavoured multiplication.  This
script multiplies a few classes, evaluates Perron-Frobenius dimensions,
and shows the Laurent polynomials in s = e^t that decorate automaton
arrows.
"""

import math

from braiddyn import FusionVec, MassPoly, chebyshev, eval_mass, fuse, mass_mul, pf_dim, ring_mul

n = 5
print(f"fusion ring for n={n}: basis [Pi_0]..[Pi_{n-2}]")
print()

d = FusionVec.simple(n, 1)
print("[Pi_1] * [Pi_1] =", ring_mul(d, d).coeffs, " (Pi_0 + Pi_2)")
print("[Pi_2] * [Pi_3] =", ring_mul(FusionVec.simple(n, 2), FusionVec.simple(n, 3)).coeffs)
print()

print("Perron-Frobenius dimensions (n=5): the golden ratio appears")
for a in range(n - 1):
    print(f"  PFdim Pi_{a} = {pf_dim(n, FusionVec.simple(n, a)):.9f}")
print(f"  golden ratio  = {(1 + math.sqrt(5)) / 2:.9f}")
print()

print("Chebyshev polynomials Delta_k (ascending coefficients):")
for k in range(6):
    print(f"  Delta_{k}: {chebyshev(k)}")
d5 = 2 * math.cos(math.pi / 5)
val = sum(c * d5**i for i, c in enumerate(chebyshev(4)))
print(f"  Delta_4(2 cos pi/5) = {val:.2e}  (vanishes at the quantum root)")
print()

print("mass polynomials: coefficients fuse, exponents of s = e^t add")
p = MassPoly.monomial(n, 1, -1)  # [Pi_1] s^-1
q = mass_mul(p, p)
print("  ([Pi_1] s^-1)^2 =", q.to_json())
for t in (-1.0, 0.0, 1.0):
    print(f"  value at t={t:+.1f}: {eval_mass(q, t):.9f}")

print()
print("fusion rule table for n=4 (rows a, columns b):")
for a in range(3):
    row = ["+".join(f"Pi_{c}" for c, m in enumerate(fuse(4, a, b).coeffs) if m) for b in range(3)]
    print("  ", row)
