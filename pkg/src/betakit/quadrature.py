"""Numerical integration for the beta(2k) representation and its helpers.

beta(2k) has no known closed form, but it equals

    (-1)^k pi^(2k) / (2 (2k-1)!) * integral_0^(1/2) E_{2k-1}(t) sec(pi t) dt.

The integrand has a removable singularity at t = 1/2 (both E_{2k-1} and
cos(pi t) have simple zeros there), repaired by evaluating the ratio of
short Taylor expansions instead of dividing nearly-zero by nearly-zero.
The auxiliary integrals

    I(k, m) = integral_0^(1/2) E_{2k}(t)   sin((2m+1) pi t) dt
    J(k, m) = integral_0^(1/2) E_{2k+1}(t) cos((2m+1) pi t) dt

are smooth, and their exact closed forms are provided alongside the
quadrature so each route can check the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy.polynomial.legendre as _legendre

from .betavalues import PiPowerValue
from .eulerpoly import euler_polynomial
from .exact import RationalPolynomial
from .highprec import BudgetExceededError

__all__ = [
    "IntegrandSpec",
    "QuadratureResult",
    "aux_integral_I_closed",
    "aux_integral_J_closed",
    "aux_integral_numeric",
    "beta_even_integrand",
    "beta_even_quadrature",
    "integrate_adaptive",
]

MIN_TOL = 1e-13  # double-precision floor for requested tolerances
SINGULARITY_WINDOW = 1e-3  # switch to the Taylor-ratio scheme inside this
_TAYLOR_ORDER = 4
_DEFAULT_MAX_EVALS = 2_000_000


def _rule(n: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    nodes, weights = _legendre.leggauss(n)
    return tuple(float(x) for x in nodes), tuple(float(w) for w in weights)


_G7 = _rule(7)
_G15 = _rule(15)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    n_evals: int

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "abs_error_estimate": self.abs_error_estimate,
            "n_evals": self.n_evals,
        }


@dataclass(frozen=True)
class IntegrandSpec:
    """Selects one of the built-in integrands on [0, 1/2].

    kind is "beta_even" (parameter k >= 1), "aux_I" or "aux_J"
    (parameters k >= 0 and m >= 0).
    """

    kind: str
    k: int
    m: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("beta_even", "aux_I", "aux_J"):
            raise ValueError(f"unknown integrand kind {self.kind!r}")
        if self.kind == "beta_even":
            if self.k < 1:
                raise ValueError("beta_even requires k >= 1")
        elif self.k < 0 or self.m < 0:
            raise ValueError("auxiliary integrals require k, m >= 0")


def _panel(f: Callable[[float], float], a: float, b: float, rule) -> float:
    nodes, weights = rule
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * math.fsum(w * f(mid + half * x) for x, w in zip(nodes, weights))


def integrate_adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    max_panel_width: float | None = None,
    max_evals: int = _DEFAULT_MAX_EVALS,
) -> QuadratureResult:
    """Adaptive composite Gauss-Legendre quadrature of f over [a, b].

    Each panel is evaluated with the 7- and 15-point rules; their
    disagreement is the panel's error estimate, and panels that miss their
    proportional share of tol/2 are bisected.  Contributions are summed in
    left-to-right order, so the result is reproducible regardless of how
    panels were scheduled.  max_panel_width seeds a finer initial subdivision
    for oscillatory integrands.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if b <= a:
        raise ValueError("need b > a")
    width = b - a
    n0 = 1 if max_panel_width is None else max(1, math.ceil(width / max_panel_width))
    stack = [(a + i * width / n0, a + (i + 1) * width / n0) for i in range(n0 - 1, -1, -1)]
    accepted: list[tuple[float, float, float]] = []
    evals = 0
    while stack:
        x0, x1 = stack.pop()
        evals += 22
        if evals > max_evals:
            raise BudgetExceededError(
                f"quadrature exceeded {max_evals} evaluations at tol={tol}"
            )
        coarse = _panel(f, x0, x1, _G7)
        fine = _panel(f, x0, x1, _G15)
        err = abs(fine - coarse)
        if err <= 0.5 * tol * (x1 - x0) / width or (x1 - x0) <= 1e-15:
            accepted.append((x0, fine, err))
        else:
            xm = 0.5 * (x0 + x1)
            stack.append((xm, x1))
            stack.append((x0, xm))
    accepted.sort(key=lambda item: item[0])
    value = math.fsum(item[1] for item in accepted)
    err_total = math.fsum(item[2] for item in accepted)
    return QuadratureResult(value, err_total, evals)


@lru_cache(maxsize=256)
def _float_coeffs(n: int) -> tuple[float, ...]:
    return euler_polynomial(n).float_coeffs()


@lru_cache(maxsize=256)
def _poly_taylor(n: int, at_half: bool) -> tuple[float, ...]:
    # Taylor coefficients of E_n about 1/2 (or 0), exact until the final
    # float conversion; the constant term is exact rational arithmetic, so
    # a zero there is a true zero, not a cancellation residue.
    x0 = Fraction(1, 2) if at_half else Fraction(0)
    p: RationalPolynomial = euler_polynomial(n)
    out: list[float] = []
    fact = 1
    for j in range(_TAYLOR_ORDER + 1):
        out.append(float(p(x0) / fact))
        p = p.derivative()
        fact *= j + 1
    return tuple(out)


def _horner(coeffs: tuple[float, ...], u: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


# cos(pi t) about t = 1/2 is -sin(pi u) = -pi u + (pi u)^3/6 - ...; after
# factoring out u this is the denominator series used by the Taylor-ratio.
_COS_AT_HALF_OVER_U = (-math.pi, 0.0, math.pi**3 / 6.0, 0.0)


def beta_even_integrand(k: int, t: float) -> float:
    """E_{2k-1}(t) * sec(pi t) on [0, 1/2], continuous at the endpoint.

    Within SINGULARITY_WINDOW of t = 1/2 the value is the ratio of the
    degree-4 Taylor expansions of E_{2k-1}(t) and cos(pi t) about 1/2 with
    the common factor (t - 1/2) cancelled; at t = 1/2 exactly this reduces
    to the limit -(2k-1) E_{2k-2}(1/2) / pi.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 0.0 <= t <= 0.5:
        raise ValueError(f"t={t} outside [0, 1/2]")
    u = t - 0.5
    if abs(u) < SINGULARITY_WINDOW:
        num = _poly_taylor(2 * k - 1, True)
        # E_{2k-1}(1/2) = 0 exactly, so num[0] is a true zero: divide out u
        return _horner(num[1:], u) / _horner(_COS_AT_HALF_OVER_U, u)
    return _horner(_float_coeffs(2 * k - 1), t) / math.cos(math.pi * t)


def beta_even_quadrature(
    k: int, tol: float, printed_sign: bool = False, max_evals: int = _DEFAULT_MAX_EVALS
) -> QuadratureResult:
    """beta(2k) by quadrature of the integral representation.

    The prefactor is (-1)^k pi^(2k) / (2 (2k-1)!).  Passing
    printed_sign=True flips it to (-1)^(k-1); that variant makes beta(2)
    come out negative and exists only so the discrepancy can be
    demonstrated against the series oracle.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if tol < MIN_TOL:
        raise ValueError(f"tol below double-precision floor {MIN_TOL}")
    sign = (-1) ** (k - 1) if printed_sign else (-1) ** k
    pref = sign * math.pi ** (2 * k) / (2.0 * math.factorial(2 * k - 1))
    inner = integrate_adaptive(
        lambda t: beta_even_integrand(k, t), 0.0, 0.5, tol / abs(pref), max_evals=max_evals
    )
    return QuadratureResult(pref * inner.value, abs(pref) * inner.abs_error_estimate, inner.n_evals)


def aux_integral_I_closed(k: int, m: int) -> PiPowerValue:
    """Closed form I(k, m) = (-1)^k (2k)! / ((2m+1)^(2k+1) pi^(2k+1))."""
    if k < 0 or m < 0:
        raise ValueError("k and m must be >= 0")
    coeff = Fraction((-1) ** k * math.factorial(2 * k), (2 * m + 1) ** (2 * k + 1))
    return PiPowerValue(coeff, -(2 * k + 1))


def aux_integral_J_closed(k: int, m: int) -> PiPowerValue:
    """Closed form J(k, m) = (-1)^(k+1) (2k+1)! / ((2m+1)^(2k+2) pi^(2k+2))."""
    if k < 0 or m < 0:
        raise ValueError("k and m must be >= 0")
    coeff = Fraction((-1) ** (k + 1) * math.factorial(2 * k + 1), (2 * m + 1) ** (2 * k + 2))
    return PiPowerValue(coeff, -(2 * k + 2))


def _aux_integrand(spec: IntegrandSpec) -> Callable[[float], float]:
    freq = (2 * spec.m + 1) * math.pi
    if spec.kind == "aux_I":
        poly = _float_coeffs(2 * spec.k)
        return lambda t: _horner(poly, t) * math.sin(freq * t)
    poly = _float_coeffs(2 * spec.k + 1)
    return lambda t: _horner(poly, t) * math.cos(freq * t)


def aux_integral_numeric(
    spec: IntegrandSpec, tol: float, max_evals: int = _DEFAULT_MAX_EVALS
) -> QuadratureResult:
    """Numerically integrate I(k, m) or J(k, m) over [0, 1/2].

    Initial panels are capped at a quarter of 1/(2m+1) so no panel spans
    more than a fraction of an oscillation period.
    """
    if spec.kind not in ("aux_I", "aux_J"):
        raise ValueError("aux_integral_numeric expects an aux_I or aux_J spec")
    if tol < MIN_TOL:
        raise ValueError(f"tol below double-precision floor {MIN_TOL}")
    cap = 1.0 / (4.0 * (2 * spec.m + 1))
    return integrate_adaptive(
        _aux_integrand(spec), 0.0, 0.5, tol, max_panel_width=cap, max_evals=max_evals
    )
