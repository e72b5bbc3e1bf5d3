"""beta(2k) through its integral representation.

No closed form is known for beta at even arguments (beta(2) is Catalan's
constant), but

    beta(2k) = (-1)^k pi^(2k) / (2 (2k-1)!) * integral_0^(1/2) E_{2k-1}(t) sec(pi t) dt.

The integrand looks singular at t = 1/2 where sec blows up, but E_{2k-1}
vanishes there too and the quotient extends continuously; the evaluator
switches to a Taylor-ratio form near the endpoint.  The prefactor sign
matters: this script also evaluates the (-1)^(k-1) variant to show it
contradicts the manifestly positive series.
"""

import math

from betakit import beta_even_integrand, beta_even_quadrature, beta_series

print("integrand endpoint behavior for k = 1 (E_1(t) sec(pi t)):")
for t in (0.0, 0.25, 0.4, 0.499, 0.4999, 0.5):
    print(f"  t = {t:<7} value = {beta_even_integrand(1, t): .12f}")
print(f"  limit at 1/2 is -(2k-1) E_0(1/2) / pi = {-1 / math.pi:.12f}\n")

print("quadrature vs the series oracle:\n")
for k in (1, 2, 3):
    quad = beta_even_quadrature(k, 1e-8)
    oracle = beta_series(2 * k, 10)
    diff = abs(quad.value - float(oracle.value))
    print(
        f"beta({2 * k}) = {quad.value:.12f}  "
        f"(error estimate {quad.abs_error_estimate:.1e}, {quad.n_evals} evals)  "
        f"series {oracle.decimal_str()}  |diff| = {diff:.1e}"
    )

print("\nthe two prefactor sign conventions at k = 1:")
good = beta_even_quadrature(1, 1e-8)
bad = beta_even_quadrature(1, 1e-8, printed_sign=True)
print(f"  (-1)^k     gives {good.value: .12f}  -> matches Catalan's constant")
print(f"  (-1)^(k-1) gives {bad.value: .12f}  -> negative, impossible for")
print("  a series that starts at +1 with decreasing terms")
