"""Exact rational and polynomial arithmetic.

Everything in the symbolic layer is computed on arbitrary-precision
rationals (``fractions.Fraction``, re-exported as :data:`Rational`) and on
dense polynomials with rational coefficients.  All values are immutable and
all operations are pure, so they can be shared freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Union

# The universal exact scalar.  Fraction already maintains the canonical form
# we need: positive denominator, gcd(|num|, den) = 1, and zero stored as 0/1.
Rational = Fraction

RationalLike = Union[int, Fraction]

__all__ = [
    "Rational",
    "RationalPolynomial",
    "binomial",
    "poly_compose_affine",
    "poly_derivative",
    "poly_eval",
    "rational_from_str",
    "rational_str",
]


def rational_str(q: RationalLike) -> str:
    """Serialize a rational as ``"p/q"``, or just ``"p"`` when q = 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: str) -> Fraction:
    """Inverse of :func:`rational_str`."""
    return Fraction(s)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k), requiring 0 <= k <= n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial requires nonnegative arguments, got ({n}, {k})")
    if k > n:
        raise ValueError(f"binomial requires k <= n, got ({n}, {k})")
    return math.comb(n, k)


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of x^i.  Canonical form: the last entry
    is nonzero; the zero polynomial is the empty tuple (its degree is the
    conventional sentinel -1).  Use :meth:`from_coefficients` to build one
    from arbitrary input; the raw constructor trusts its argument.
    """

    coeffs: tuple[Fraction, ...] = ()

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[RationalLike]) -> "RationalPolynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @classmethod
    def monomial(cls, power: int, coeff: RationalLike = 1) -> "RationalPolynomial":
        c = Fraction(coeff)
        if c == 0:
            return cls(())
        return cls((Fraction(0),) * power + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    @cached_property
    def _integer_form(self) -> tuple[int, tuple[int, ...]]:
        # Common-denominator form (D, c) with self = (1/D) * sum c_i x^i.
        # Cached so repeated evaluation works on plain integers.
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return d, tuple(int(c * d) for c in self.coeffs)

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial.from_coefficients(out)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: RationalLike) -> "RationalPolynomial":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        s = Fraction(scalar)
        if s == 0:
            return RationalPolynomial(())
        return RationalPolynomial(tuple(c * s for c in self.coeffs))

    __rmul__ = __mul__

    def derivative(self) -> "RationalPolynomial":
        return poly_derivative(self)

    def compose_affine(self, a: RationalLike, b: RationalLike) -> "RationalPolynomial":
        return poly_compose_affine(self, a, b)

    def float_coeffs(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = rational_str(mag)
            else:
                x = "x" if i == 1 else f"x^{i}"
                body = x if mag == 1 else f"{rational_str(mag)}*{x}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


def poly_eval(p: RationalPolynomial, x: RationalLike) -> Fraction:
    """Exact value of p at x.

    Horner's rule on the common-denominator integer form: for x = u/v the
    value is (sum c_i u^i v^(d-i)) / (D v^d), one gcd at the end instead of
    one per operation.
    """
    if not p.coeffs:
        return Fraction(0)
    x = Fraction(x)
    d, ints = p._integer_form
    u, v = x.numerator, x.denominator
    deg = len(ints) - 1
    if v == 1:
        acc = ints[deg]
        for i in range(deg - 1, -1, -1):
            acc = acc * u + ints[i]
        return Fraction(acc, d)
    vpow = [1] * (deg + 1)
    for j in range(1, deg + 1):
        vpow[j] = vpow[j - 1] * v
    acc = ints[deg]
    for i in range(deg - 1, -1, -1):
        acc = acc * u + ints[i] * vpow[deg - i]
    return Fraction(acc, d * vpow[deg])


def poly_derivative(p: RationalPolynomial) -> RationalPolynomial:
    """Formal derivative, in canonical form."""
    if len(p.coeffs) <= 1:
        return RationalPolynomial(())
    return RationalPolynomial(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def poly_compose_affine(
    p: RationalPolynomial, a: RationalLike, b: RationalLike
) -> RationalPolynomial:
    """The polynomial q with q(x) = p(a*x + b), computed exactly.

    Horner in the polynomial ring: fold the coefficient list from the top,
    multiplying by (a*x + b) at each step.
    """
    a = Fraction(a)
    b = Fraction(b)
    if not p.coeffs:
        return RationalPolynomial(())
    acc: list[Fraction] = [p.coeffs[-1]]
    for i in range(len(p.coeffs) - 2, -1, -1):
        # acc <- acc * (a x + b) + c_i
        nxt = [Fraction(0)] * (len(acc) + 1)
        for j, c in enumerate(acc):
            nxt[j] += c * b
            nxt[j + 1] += c * a
        nxt[0] += p.coeffs[i]
        acc = nxt
    return RationalPolynomial.from_coefficients(acc)
