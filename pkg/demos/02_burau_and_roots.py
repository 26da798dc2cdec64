"""Exact Burau matrices, the dihedral reflection representation, and roots.

The Burau representation is the bridge between words and linear algebra:
it is exact (Laurent polynomials in q with fusion-class coefficients),
faithful in rank two, and specialises at q = -1 to the reflection
representation of the dihedral group, whose root system drives the whole
stability picture.
"""

import numpy as np

from braiddyn import BraidWord, burau, coxeter_matrix, parse_word, positive_roots

n = 5

print("Burau matrix of s1 (entries: list of (q-exponent, class vector)):")
m = burau(BraidWord.generator(n, 1))
for row in m:
    print("  ", [entry.to_json() for entry in row])
print()

left = parse_word("s1 s2 s1 s2 s1", n)
right = parse_word("s2 s1 s2 s1 s2", n)
print("braid relation: Burau(s1 s2 s1 s2 s1) == Burau(s2 s1 s2 s1 s2)?")
print("  ", all(
    (burau(left)[i][j].terms == burau(right)[i][j].terms)
    for i in range(2)
    for j in range(2)
))
print()

print("Coxeter specialisation q = -1:")
print(coxeter_matrix(BraidWord.generator(n, 1)))
print()

gamma = BraidWord.gamma_power(n, 1)
print(f"gamma = s2 s1 acts as a rotation by 2 pi/{n}; gamma^{n} is the identity:")
print(np.round(coxeter_matrix(gamma**n), 12))
print()

roots = positive_roots(n)
print("positive roots (unit vectors at angles k pi/n):")
for k, z in enumerate(roots):
    print(f"  k={k}: {z:.6f}  |z| = {abs(z):.12f}")
