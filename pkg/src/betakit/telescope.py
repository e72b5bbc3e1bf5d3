"""Executable form of the telescoping convergence arguments.

The alternating sums of the auxiliary integrals collapse by telescoping:
after subtracting a sine multiple that removes the m = 0 resonance, the
modified sums converge to zero, and the J-family sums converge to the
integral that represents beta(2k).  This module provides the modified
integrand, the exact correction term, the extended boundary functions whose
finiteness drives the cancellation, and partial-sum traces that exhibit the
limits numerically.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .eulerpoly import euler_number, euler_polynomial, generalized_bernoulli_chi4
from .quadrature import (
    SINGULARITY_WINDOW,
    beta_even_integrand,
    integrate_adaptive,
)

__all__ = [
    "ExtendedFunctionSpec",
    "PartialSumTrace",
    "correction_term",
    "e_star",
    "extended_eval",
    "partial_sum_I_star",
    "partial_sum_J",
]

_TAYLOR_ORDER = 4


@lru_cache(maxsize=256)
def _estar_float_data(k: int) -> tuple[tuple[float, ...], float]:
    poly = euler_polynomial(2 * k).float_coeffs()
    return poly, float(euler_number(2 * k) / 2 ** (2 * k))


def e_star(k: int, t: float) -> float:
    """The modified integrand E*_{2k}(t) = E_{2k}(t) - (E_{2k}/2^(2k)) sin(pi t).

    The subtraction makes both endpoint values vanish for k >= 1 (and the
    t = 1/2 value vanish for every k), which is what lets the telescoped
    series cancel.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if not 0.0 <= t <= 0.5:
        raise ValueError(f"t={t} outside [0, 1/2]")
    poly, scale = _estar_float_data(k)
    acc = 0.0
    for c in reversed(poly):
        acc = acc * t + c
    return acc - scale * math.sin(math.pi * t)


def correction_term(k: int, m: int) -> Fraction:
    """Exact value of the integral removed by the modification.

    integral_0^(1/2) (E_{2k}/2^(2k)) sin(pi t) sin((2m+1) pi t) dt equals
    E_{2k}/2^(2k+2) when m = 0 and vanishes otherwise.  The equivalent
    form -B_{2k+1,chi4}/((2k+1) 2^(2k+1)) is computed as well and must
    agree exactly; a mismatch would mean a corrupted table.
    """
    if k < 0 or m < 0:
        raise ValueError("k and m must be >= 0")
    if m != 0:
        return Fraction(0)
    value = euler_number(2 * k) / Fraction(2) ** (2 * k + 2)
    alt = -generalized_bernoulli_chi4(2 * k + 1) / ((2 * k + 1) * Fraction(2) ** (2 * k + 1))
    if value != alt:
        raise RuntimeError(f"correction term self-check failed for k={k}")
    return value


# Series for the trigonometric factors about the relevant endpoint, written
# in u = t - t0.  Denominators all have simple zeros, so they are stored
# with the factor u already divided out.
_SIN2PI_AT_0_OVER_U = (2 * math.pi, 0.0, -((2 * math.pi) ** 3) / 6.0, 0.0)
_SIN2PI_AT_HALF_OVER_U = (-2 * math.pi, 0.0, (2 * math.pi) ** 3 / 6.0, 0.0)
_COS_AT_HALF_OVER_U = (-math.pi, 0.0, math.pi**3 / 6.0, 0.0)
# sin(pi t) itself (a numerator ingredient): full series including order 0
_SINPI_AT_0 = (0.0, math.pi, 0.0, -(math.pi**3) / 6.0, 0.0)
_SINPI_AT_HALF = (1.0, 0.0, -(math.pi**2) / 2.0, 0.0, math.pi**4 / 24.0)


def _horner(coeffs: tuple[float, ...], u: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


@lru_cache(maxsize=256)
def _estar_taylor(k: int, at_half: bool) -> tuple[float, ...]:
    # Taylor coefficients of E*_{2k} about 0 or 1/2.  The polynomial part is
    # exact; the leading coefficient is combined in rational arithmetic so
    # that the structural zeros at the singular endpoints are exact zeros.
    x0 = Fraction(1, 2) if at_half else Fraction(0)
    scale = euler_number(2 * k) / Fraction(2) ** (2 * k)
    sin_series = _SINPI_AT_HALF if at_half else _SINPI_AT_0
    p = euler_polynomial(2 * k)
    out: list[float] = []
    fact = 1
    for j in range(_TAYLOR_ORDER + 1):
        poly_coeff = p(x0) / fact
        if j == 0:
            out.append(float(poly_coeff - scale * Fraction(sin_series[0])))
        else:
            out.append(float(poly_coeff) - float(scale) * sin_series[j])
        p = p.derivative()
        fact *= j + 1
    return tuple(out)


@lru_cache(maxsize=256)
def _odd_euler_taylor_at_half(n: int) -> tuple[float, ...]:
    p = euler_polynomial(n)
    out: list[float] = []
    fact = 1
    for j in range(_TAYLOR_ORDER + 1):
        out.append(float(p(Fraction(1, 2)) / fact))
        p = p.derivative()
        fact *= j + 1
    return tuple(out)


@dataclass(frozen=True)
class ExtendedFunctionSpec:
    """One of the boundary-extended quotients f, g, h on [0, 1/2].

      f(t) = E*_{2k}(t) / sin(2 pi t)      (k >= 1; singular at 0 and 1/2)
      g(t) = E*_{2k}(t) / cos(pi t)        (k >= 0; singular at 1/2)
      h(t) = E_{2k-1}(t) / (2 cos(pi t))   (k >= 1; singular at 1/2)

    f needs k >= 1 because E*_0(0) = 1: the quotient genuinely diverges at
    t = 0 for k = 0, so no continuous extension exists there.
    endpoint_values maps the singular endpoints ("0", "1/2") to the exact
    limits, precomputed from polynomial data rather than by numeric
    limiting.
    """

    name: str
    k: int
    endpoint_values: dict

    def __init__(self, name: str, k: int) -> None:
        if name not in ("f", "g", "h"):
            raise ValueError(f"unknown extended function {name!r}")
        if name == "g":
            if k < 0:
                raise ValueError("g requires k >= 0")
        elif k < 1:
            raise ValueError(f"{name} requires k >= 1")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "k", k)
        ev: dict[str, float] = {}
        if name == "f":
            at_zero = (
                2 * k * float(euler_polynomial(2 * k - 1)(Fraction(0)))
                - math.pi * float(euler_number(2 * k) / 2 ** (2 * k))
            ) / (2 * math.pi)
            ev["0"] = at_zero
            ev["1/2"] = 0.0
        elif name == "g":
            ev["1/2"] = 0.0
        else:
            ev["1/2"] = -(2 * k - 1) * float(
                euler_polynomial(2 * k - 2)(Fraction(1, 2))
            ) / (2 * math.pi)
        object.__setattr__(self, "endpoint_values", ev)


def extended_eval(spec: ExtendedFunctionSpec, t: float) -> float:
    """Evaluate f, g or h, using the Taylor-ratio repair near singular points."""
    if not 0.0 <= t <= 0.5:
        raise ValueError(f"t={t} outside [0, 1/2]")
    k = spec.k
    if spec.name == "h":
        return 0.5 * beta_even_integrand(k, t)
    if spec.name == "f":
        if t < SINGULARITY_WINDOW:
            num = _estar_taylor(k, False)
            return _horner(num[1:], t) / _horner(_SIN2PI_AT_0_OVER_U, t)
        if 0.5 - t < SINGULARITY_WINDOW:
            u = t - 0.5
            num = _estar_taylor(k, True)
            return _horner(num[1:], u) / _horner(_SIN2PI_AT_HALF_OVER_U, u)
        return e_star(k, t) / math.sin(2 * math.pi * t)
    # g
    if 0.5 - t < SINGULARITY_WINDOW:
        u = t - 0.5
        num = _estar_taylor(k, True)
        return _horner(num[1:], u) / _horner(_COS_AT_HALF_OVER_U, u)
    return e_star(k, t) / math.cos(math.pi * t)


@dataclass(frozen=True)
class PartialSumTrace:
    """Sampled partial sums S_n of a telescoped alternating sum.

    For family "I_star" the target is 0; for family "J" the target is the
    integral of E_{2k-1}(t) sec(pi t) / 2 over [0, 1/2], evaluated by
    quadrature.
    """

    family: str
    k: int
    target: float
    entries: tuple[tuple[int, float], ...]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "target": self.target,
            "entries": [[n, s] for n, s in self.entries],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def to_csv(self) -> str:
        lines = ["family,k,N,S_N,target"]
        for n, s in self.entries:
            lines.append(f"{self.family},{self.k},{n},{s!r},{self.target!r}")
        return "\n".join(lines) + "\n"

    def final(self) -> float:
        return self.entries[-1][1]


def _trace_samples(n_max: int) -> list[int]:
    # every n below 10, then decades, always including the requested endpoint
    samples = set(range(0, min(n_max, 9) + 1))
    decade = 10
    while decade <= n_max:
        samples.add(decade)
        decade *= 10
    samples.add(n_max)
    return sorted(samples)


def partial_sum_I_star(k: int, n_max: int) -> PartialSumTrace:
    """Partial sums of sum_m (-1)^m I*(k, m), which telescope to zero.

    I*(k, m) differs from I(k, m) only by the m = 0 correction term, so the
    partial sums come from the closed form of I: no quadrature is needed,
    and traces to n in the thousands are cheap.
    """
    if k < 0 or n_max < 0:
        raise ValueError("k and n_max must be >= 0")
    pref = (-1) ** k * math.factorial(2 * k) / math.pi ** (2 * k + 1)
    corr = float(correction_term(k, 0))
    power = 2 * k + 1
    entries = []
    for n in _trace_samples(n_max):
        s = math.fsum(
            (1.0 if m % 2 == 0 else -1.0) / float((2 * m + 1) ** power)
            for m in range(n + 1)
        )
        entries.append((n, pref * s - corr))
    return PartialSumTrace("I_star", k, 0.0, tuple(entries))


def partial_sum_J(k: int, n_max: int, tol: float) -> PartialSumTrace:
    """Partial sums of sum_m (-1)^m J(k-1, m) against their integral target.

    The closed form gives the terms; the target integral of
    E_{2k-1}(t) sec(pi t) / 2 is evaluated once by quadrature at `tol`.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    target = integrate_adaptive(
        lambda t: 0.5 * beta_even_integrand(k, t), 0.0, 0.5, tol
    )
    pref = (-1) ** k * math.factorial(2 * k - 1) / math.pi ** (2 * k)
    power = 2 * k
    entries = []
    for n in _trace_samples(n_max):
        s = math.fsum(
            (1.0 if m % 2 == 0 else -1.0) / float((2 * m + 1) ** power)
            for m in range(n + 1)
        )
        entries.append((n, pref * s))
    return PartialSumTrace("J", k, target.value, tuple(entries))
