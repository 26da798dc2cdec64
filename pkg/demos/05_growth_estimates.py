"""Compare the closed-form mass growth with the iterative estimator.

The estimator never multiplies arrow matrices: it pushes the basis
objects of a vertex through the letter sequence with the unit-level
support tables and reports log(m_N / m_{N-1}).  Agreement with the
Perron-Frobenius closed form is an end-to-end check of the index
arithmetic, the wraparound shifts and the fusion coefficients.
"""

from braiddyn import classify, estimate_growth, parse_word

CASES = [(5, "s1 s1 s2 s2"), (4, "s2^2 s1^3"), (6, "s1 s2^-1 s1 s2")]

for n, text in CASES:
    w = parse_word(text, n)
    res = classify(n, w)
    print(f"n={n}, word {text!r}: {res.braid_type}")
    print(f"  {'t':>5}  {'estimate (N=24)':>16}  {'closed form':>12}")
    for t in (-0.5, -0.25, 0.0, 0.25, 0.5):
        est = estimate_growth(n, w, N=24, t=t)
        exact = res.growth.evaluate(t)
        print(f"  {t:+.2f}  {est:16.9f}  {exact:12.9f}")
    print()

print("convergence of the ratio estimator (n=5, s1 s1 s2 s2, t=0):")
w = parse_word("s1 s1 s2 s2", 5)
exact = classify(5, w).growth.evaluate(0.0)
for N in (2, 4, 8, 16, 24):
    est = estimate_growth(5, w, N=N, t=0.0)
    print(f"  N={N:>2}: estimate = {est:.12f}, error = {abs(est - exact):.2e}")
