"""Classify a gallery of braids and print their exact mass growths.

Periodic braids have linear growth, reducible braids strictly piecewise
linear growth, pseudo-Anosov braids growth log PF(M(p))(t) with
log PF >= log 2 at t = 0.  The type and h_t are conjugation invariants.
"""

import math

from braiddyn import classify, parse_word

GALLERY = [
    (5, ""),
    (5, "s1"),
    (5, "s2^-1"),
    (5, "s1 s1 s2 s2"),
    (5, "s2 s1 s2 s1^-1 s2 s1 s2^-1 s1 s2^3 s1"),
    (4, "s2^2 s1^3"),
    (4, "s2 s1 s2 s1^-1 s2^-1 s1"),
    (4, "s2^-2 s1 s2"),
    (3, "s1 s2 s1"),
    (6, "s1 s2^-1"),
]

for n, text in GALLERY:
    res = classify(n, parse_word(text, n))
    word = text or "(identity)"
    print(f"n={n:>2}  {word:<38} {res.braid_type:<14} h0 = {res.h0():.9f}")
    print(f"      normal form: {res.normal_form.text()}")
    print(f"      growth: {res.growth.describe()}")
    if res.params is not None:
        print(f"      parameters: {res.params}")
    print()

print("conjugation invariance in action:")
w = parse_word("s1 s1 s2 s2", 5)
c = parse_word("s2 s1^-1 s2", 5)
base = classify(5, w)
other = classify(5, c * w * c.inverse())
print(f"  h0(beta) = {base.h0():.12f}")
print(f"  h0(c beta c^-1) = {other.h0():.12f}")
print(f"  reference log(2 sqrt(sqrt5+2) + sqrt5 + 2) = "
      f"{math.log(2 * math.sqrt(math.sqrt(5) + 2) + math.sqrt(5) + 2):.12f}")
