"""The Euler/Bernoulli identity suite, and what a corrupted table looks like.

Every identity the closed forms rely on is checked in exact rational
arithmetic: no tolerances, no rounding.  A deliberately corrupted Euler
number demonstrates that the suite actually has teeth.
"""

from fractions import Fraction

from betakit import EulerTable, run_identity_suite

report = run_identity_suite(nmax=20, trials=10, seed=42)
print(f"identity suite at nmax=20, trials=10, seed=42:\n")
for r in report.results:
    print(f"  {r.identity_id:<24} {r.instances:>5} instances  {'pass' if r.passed else 'FAIL'}")
print(f"\nall passed: {report.all_passed}")

print("\nnegative control: replace E_4 = 5 by 6 and rerun...")
corrupted = EulerTable()
corrupted.ensure(10)
corrupted.numbers[4] = Fraction(6)
control = run_identity_suite(nmax=10, trials=5, seed=42, euler=corrupted)
for r in control.results:
    if not r.passed:
        print(f"  {r.identity_id} fails, first failure at {r.first_failure}")
print(f"all passed: {control.all_passed}  (exactly the power identity breaks)")
