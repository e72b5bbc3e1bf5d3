"""Exact values of beta(2k+1) as rational multiples of pi powers.

beta(s) = 1 - 1/3^s + 1/5^s - 1/7^s + ... converges slowly, yet at odd
arguments the limit is an exact rational multiple of pi^s.  Two independent
exact routes produce the coefficient: one through the generalized Bernoulli
numbers for the nontrivial character mod 4, one through the Euler numbers.
This script prints both, renders the decimals with a certified pi, and
checks everything against the alternating series summed with a certified
error bound.
"""

from betakit import (
    beta_odd_exact,
    beta_odd_exact_via_euler,
    beta_series,
    render_decimal,
)

print("exact closed forms (both routes must agree exactly):\n")
print(f"{'s':>3}  {'closed form':<32}{'via Euler numbers':<32}{'decimal (20 digits)'}")
for k in range(7):
    v = beta_odd_exact(k)
    w = beta_odd_exact_via_euler(k)
    assert v == w
    dec = render_decimal(v, 20).decimal_str()
    print(f"{2 * k + 1:>3}  {str(v):<32}{str(w):<32}{dec}")

print("\ncross-check against the series oracle at 14 digits:\n")
for k in range(7):
    rendered = render_decimal(beta_odd_exact(k), 14)
    oracle = beta_series(2 * k + 1, 14)
    diff = abs(rendered.value - oracle.value)
    print(
        f"beta({2 * k + 1}): closed form {rendered.decimal_str()}  "
        f"series {oracle.decimal_str()}  |diff| = {float(diff):.1e}"
    )

print("\nbeta(3) to 50 digits, both ways:")
print("  closed form:", render_decimal(beta_odd_exact(1), 50).decimal_str())
print("  series:     ", beta_series(3, 50).decimal_str())
