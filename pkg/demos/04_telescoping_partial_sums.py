"""Watching the telescoping arguments converge.

The alternating sums of the auxiliary integrals are where the closed forms
come from.  After the m = 0 correction is subtracted, the modified sums
S_N = sum_{m<=N} (-1)^m I*(k, m) telescope to zero like 1/N; the J-family
sums converge to the integral representing beta(2k).
"""

import math

from betakit import correction_term, partial_sum_I_star, partial_sum_J

print("modified sums S_N -> 0 (entries scaled by N to show the 1/N rate):\n")
for k in (0, 1, 2):
    trace = partial_sum_I_star(k, 10000)
    by_n = dict(trace.entries)
    print(f"  k = {k}: correction term = {correction_term(k, 0)}")
    for n in (10, 100, 1000, 10000):
        print(f"      N = {n:<6} S_N = {by_n[n]: .3e}   N*|S_N| = {n * abs(by_n[n]):.4f}")

print("\nJ-family sums against their integral target:\n")
for k in (1, 2):
    trace = partial_sum_J(k, 10000, 1e-8)
    print(f"  k = {k}: target integral = {trace.target: .10f}")
    for n in (0, 10, 100, 10000):
        s = dict(trace.entries)[n]
        print(f"      N = {n:<6} S_N = {s: .10f}   |S_N - target| = {abs(s - trace.target):.2e}")
    beta_even = (-1) ** k * trace.target * math.pi ** (2 * k) / math.factorial(2 * k - 1)
    print(f"      rescaled target gives beta({2 * k}) = {beta_even:.10f}")
