"""Exact arithmetic for the rank-two Temperley-Lieb-Jones fusion ring.

For each n >= 3 the fusion ring has a free Z-basis of simple classes
[Pi_0], ..., [Pi_{n-2}], with [Pi_0] the unit and multiplication given by
the truncated Clebsch-Gordan rule.  A ``FusionVec`` stores a nonnegative
integer coefficient per simple class; every quantity handled by this
package is a nonnegative combination of simple classes, so negativity is
rejected at construction.  We deliberately do *not* work in the quotient
presentation Z[w]/(D_{n-1}(w)): the defining Chebyshev polynomial is
reducible for general n, the quotient has zero divisors, and the basis
representation keeps zero-detection exact.

A ``MassPoly`` is a Laurent polynomial in s = e^t whose coefficients are
FusionVecs.  These are the entries of all mass matrices: the exponent of s
records the level (cohomological shift minus internal shift) of a
summand, the FusionVec records which simple classes decorate it.  Numeric
evaluation sends [Pi_a] to its Perron-Frobenius dimension
Delta_a(2 cos(pi/n)) and s to e^t; all structural decisions (zero
patterns) are made on the symbolic side, never on floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "FusionVec",
    "MassPoly",
    "chebyshev",
    "delta_value",
    "fuse",
    "pf_dim",
    "ring_mul",
    "mass_mul",
    "eval_mass",
]


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"rank-two fusion data needs n >= 3, got n={n}")


@lru_cache(maxsize=None)
def chebyshev(k: int) -> tuple[int, ...]:
    """Coefficients (ascending powers) of the normalised Chebyshev polynomial.

    Delta_0 = 1, Delta_1 = d, Delta_{k+1} = d*Delta_k - Delta_{k-1}.
    """
    if k < 0:
        raise ValueError("chebyshev index must be nonnegative")
    if k == 0:
        return (1,)
    if k == 1:
        return (0, 1)
    prev2, prev1 = chebyshev(k - 2), chebyshev(k - 1)
    shifted = (0,) + prev1
    return tuple(
        shifted[i] - (prev2[i] if i < len(prev2) else 0) for i in range(len(shifted))
    )


@lru_cache(maxsize=None)
def _delta_table(n: int) -> tuple[float, ...]:
    # Delta_a(2 cos(pi/n)) for a = 0..n-1; the last entry vanishes.
    d = 2.0 * math.cos(math.pi / n)
    vals = [1.0, d]
    for _ in range(2, n):
        vals.append(d * vals[-1] - vals[-2])
    return tuple(vals)


def delta_value(n: int, a: int) -> float:
    """Perron-Frobenius dimension of the simple class [Pi_a]."""
    _check_n(n)
    if not 0 <= a <= n - 2:
        raise ValueError(f"label {a} out of range for n={n}")
    return _delta_table(n)[a]


@dataclass(frozen=True)
class FusionVec:
    """Nonnegative integer combination of the simple classes [Pi_a]."""

    n: int
    coeffs: tuple[int, ...]  # slot a = multiplicity of [Pi_a], length n-1

    def __post_init__(self):
        _check_n(self.n)
        if len(self.coeffs) != self.n - 1:
            raise ValueError(
                f"expected {self.n - 1} coefficients for n={self.n}, "
                f"got {len(self.coeffs)}"
            )
        if any(c < 0 for c in self.coeffs):
            raise ValueError("fusion coefficients must be nonnegative")

    @classmethod
    def zero(cls, n: int) -> FusionVec:
        return cls(n, (0,) * (n - 1))

    @classmethod
    def simple(cls, n: int, a: int) -> FusionVec:
        """The basis class [Pi_a]."""
        _check_n(n)
        if not 0 <= a <= n - 2:
            raise ValueError(f"label {a} out of range for n={n}")
        return cls(n, tuple(1 if i == a else 0 for i in range(n - 1)))

    @classmethod
    def unit(cls, n: int) -> FusionVec:
        return cls.simple(n, 0)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def fold(self) -> FusionVec:
        """Canonical form modulo the involution [Pi_a] -> [Pi_{n-2-a}].

        The involution is multiplication by the invertible class
        [Pi_{n-2}], so folding is a ring congruence; it identifies
        exactly the classes with equal Perron-Frobenius dimension.
        """
        out = [0] * (self.n - 1)
        for a, c in enumerate(self.coeffs):
            out[min(a, self.n - 2 - a)] += c
        return FusionVec(self.n, tuple(out))

    def __add__(self, other: FusionVec) -> FusionVec:
        if self.n != other.n:
            raise ValueError("mismatched fusion parameters")
        return FusionVec(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scaled(self, m: int) -> FusionVec:
        if m < 0:
            raise ValueError("fusion coefficients must stay nonnegative")
        return FusionVec(self.n, tuple(m * c for c in self.coeffs))


def fuse(n: int, a: int, b: int) -> FusionVec:
    """Decompose [Pi_a] * [Pi_b] as a multiplicity-free sum of simples.

    The summands are Pi_{|a-b|}, Pi_{|a-b|+2}, ... up to Pi_{a+b} when
    a+b <= n-2 and up to Pi_{2n-(a+b)-4} otherwise.
    """
    _check_n(n)
    for lbl in (a, b):
        if not 0 <= lbl <= n - 2:
            raise ValueError(f"label {lbl} out of range for n={n}")
    top = a + b if a + b <= n - 2 else 2 * n - (a + b) - 4
    coeffs = [0] * (n - 1)
    for c in range(abs(a - b), top + 1, 2):
        coeffs[c] = 1
    return FusionVec(n, tuple(coeffs))


def ring_mul(u: FusionVec, v: FusionVec) -> FusionVec:
    """Bilinear extension of ``fuse`` to arbitrary nonnegative combinations."""
    if u.n != v.n:
        raise ValueError("mismatched fusion parameters")
    out = FusionVec.zero(u.n)
    for a, ca in enumerate(u.coeffs):
        if ca == 0:
            continue
        for b, cb in enumerate(v.coeffs):
            if cb == 0:
                continue
            out = out + fuse(u.n, a, b).scaled(ca * cb)
    return out


def pf_dim(n: int, v: FusionVec) -> float:
    """Ring homomorphism to R sending [Pi_a] to Delta_a(2 cos(pi/n))."""
    _check_n(n)
    if v.n != n:
        raise ValueError("mismatched fusion parameters")
    table = _delta_table(n)
    return sum(c * table[a] for a, c in enumerate(v.coeffs))


@dataclass(frozen=True)
class MassPoly:
    """Laurent polynomial in s = e^t with FusionVec coefficients.

    ``terms`` maps the exponent of s to a nonzero FusionVec; the empty
    polynomial is zero.  Evaluation at any real t is nonnegative and
    vanishes only for the empty polynomial.
    """

    n: int
    terms: tuple[tuple[int, FusionVec], ...]  # sorted by exponent, no zero vecs

    def __post_init__(self):
        _check_n(self.n)
        exps = [e for e, _ in self.terms]
        if exps != sorted(exps) or len(set(exps)) != len(exps):
            raise ValueError("terms must be sorted by exponent and distinct")
        for e, vec in self.terms:
            if vec.n != self.n:
                raise ValueError("mismatched fusion parameters in term")
            if vec.is_zero():
                raise ValueError("zero coefficient must not be stored")

    @classmethod
    def from_dict(cls, n: int, d: dict[int, FusionVec]) -> MassPoly:
        return cls(n, tuple(sorted((e, v) for e, v in d.items() if not v.is_zero())))

    @classmethod
    def zero(cls, n: int) -> MassPoly:
        return cls(n, ())

    @classmethod
    def monomial(cls, n: int, a: int, e: int = 0, mult: int = 1) -> MassPoly:
        """mult * [Pi_a] * s^e"""
        if mult == 0:
            return cls.zero(n)
        return cls.from_dict(n, {e: FusionVec.simple(n, a).scaled(mult)})

    @classmethod
    def one(cls, n: int) -> MassPoly:
        return cls.monomial(n, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: MassPoly) -> MassPoly:
        if self.n != other.n:
            raise ValueError("mismatched fusion parameters")
        acc = {e: v for e, v in self.terms}
        for e, v in other.terms:
            acc[e] = acc[e] + v if e in acc else v
        return MassPoly.from_dict(self.n, acc)

    def shifted(self, e: int) -> MassPoly:
        """Multiply by s^e."""
        return MassPoly(self.n, tuple((k + e, v) for k, v in self.terms))

    def fold(self) -> MassPoly:
        """Fold every coefficient; see :meth:`FusionVec.fold`."""
        return MassPoly.from_dict(self.n, {e: v.fold() for e, v in self.terms})

    def to_json(self) -> list[dict]:
        return [{"e": e, "coeffs": list(v.coeffs)} for e, v in self.terms]

    @classmethod
    def from_json(cls, n: int, data: list[dict]) -> MassPoly:
        return cls.from_dict(
            n, {int(t["e"]): FusionVec(n, tuple(t["coeffs"])) for t in data}
        )


def mass_mul(p: MassPoly, q: MassPoly) -> MassPoly:
    """Product of mass polynomials; exponents add, coefficients fuse."""
    if p.n != q.n:
        raise ValueError("mismatched fusion parameters")
    acc: dict[int, FusionVec] = {}
    for e1, v1 in p.terms:
        for e2, v2 in q.terms:
            prod = ring_mul(v1, v2)
            e = e1 + e2
            acc[e] = acc[e] + prod if e in acc else prod
    return MassPoly.from_dict(p.n, acc)


def eval_mass(p: MassPoly, t: float) -> float:
    """Evaluate at s = e^t; the result is >= 0, and 0 only for the zero polynomial."""
    return sum(pf_dim(p.n, v) * math.exp(e * t) for e, v in p.terms)
