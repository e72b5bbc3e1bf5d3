"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the recurrences used inside the
package: Euler data is recovered by exact power-series division of the
generating functions, and Bernoulli polynomials by the
derivative/mean-zero characterization.  Expected values frozen in the
tests were computed by these routes.
"""

from __future__ import annotations

import math
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from betakit.exact import RationalPolynomial

# 50 decimal digits of pi, for checking the certified rendering
PI_LITERAL = Fraction(
    31415926535897932384626433832795028841971693993751,
    10**49,
)

# beta(2) = Catalan's constant, 30 digits; no closed form is known, so this
# literal is the external anchor for the even-argument checks
CATALAN_LITERAL = Fraction(915965594177219015054603514932, 10**30)


def gf_euler_number_oracle(n: int) -> Fraction:
    """E_n from exact series division of 2 e^t / (e^(2t) + 1)."""
    fact = [math.factorial(i) for i in range(n + 1)]
    num = [Fraction(2, fact[i]) for i in range(n + 1)]
    den = [Fraction(2**i, fact[i]) for i in range(n + 1)]
    den[0] += 1
    quot: list[Fraction] = []
    for i in range(n + 1):
        acc = num[i]
        for j in range(1, i + 1):
            acc -= den[j] * quot[i - j]
        quot.append(acc / den[0])
    return quot[n] * fact[n]


def gf_euler_poly_oracle(n: int) -> RationalPolynomial:
    """E_n(x) from exact series division of 2 e^(xt) / (e^t + 1).

    Coefficients of t^i are polynomials in x: numerator 2 x^i / i!,
    denominator the scalar series of e^t + 1.
    """
    fact = [math.factorial(i) for i in range(n + 1)]
    num = [RationalPolynomial.monomial(i, Fraction(2, fact[i])) for i in range(n + 1)]
    den = [Fraction(1, fact[i]) for i in range(n + 1)]
    den[0] += 1
    quot: list[RationalPolynomial] = []
    for i in range(n + 1):
        acc = num[i]
        for j in range(1, i + 1):
            acc = acc - den[j] * quot[i - j]
        quot.append(acc * (1 / den[0]))
    return quot[n] * Fraction(fact[n])


def _poly_antiderivative(p: RationalPolynomial) -> RationalPolynomial:
    coeffs = [Fraction(0)] + [c / (i + 1) for i, c in enumerate(p.coeffs)]
    return RationalPolynomial.from_coefficients(coeffs)


def bernoulli_poly_oracle(n: int) -> RationalPolynomial:
    """B_n(x) characterized by B_0 = 1, B_n' = n B_{n-1}, mean zero on [0,1]."""
    p = RationalPolynomial.from_coefficients([1])
    for m in range(1, n + 1):
        p = m * _poly_antiderivative(p)
        anti = _poly_antiderivative(p)
        mean = anti(Fraction(1)) - anti(Fraction(0))
        p = p - RationalPolynomial.from_coefficients([mean])
    return p


def akiyama_tanigawa_bernoulli(n: int) -> list[Fraction]:
    """B_0..B_n by the Akiyama-Tanigawa triangle, adjusted to B_1 = -1/2."""
    row = [Fraction(0)] * (n + 1)
    out: list[Fraction] = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    if n >= 1:
        out[1] = -out[1]
    return out


@pytest.fixture(scope="session")
def run_betakit():
    """Run the installed CLI in a subprocess with a pinned environment."""

    def run(args: list[str], env_extra: dict | None = None) -> subprocess.CompletedProcess:
        env = os.environ.copy()
        env.pop("BETAKIT_DIGITS", None)
        env["COLUMNS"] = "80"
        if env_extra:
            env.update(env_extra)
        return subprocess.run(
            [sys.executable, "-m", "betakit", *args],
            capture_output=True,
            env=env,
            timeout=120,
        )

    return run
