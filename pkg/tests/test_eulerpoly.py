"""Euler/Bernoulli tables, generating-function oracles, and the identity suite."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betakit.eulerpoly import (
    BernoulliTable,
    EulerTable,
    bernoulli_number,
    bernoulli_polynomial,
    euler_number,
    euler_polynomial,
    generalized_bernoulli_chi4,
    gf_coefficient_check,
    run_identity_suite,
)
from betakit.exact import RationalPolynomial

from conftest import (
    akiyama_tanigawa_bernoulli,
    bernoulli_poly_oracle,
    gf_euler_number_oracle,
    gf_euler_poly_oracle,
)

F = Fraction
HALF = F(1, 2)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)


class TestEulerPolynomials:
    def test_first_polynomials(self):
        assert euler_polynomial(0) == RationalPolynomial.from_coefficients([1])
        assert euler_polynomial(1) == RationalPolynomial.from_coefficients([-HALF, 1])
        assert euler_polynomial(2) == RationalPolynomial.from_coefficients([0, -1, 1])
        assert euler_polynomial(3) == RationalPolynomial.from_coefficients(
            [F(1, 4), 0, F(-3, 2), 1]
        )

    def test_e5_against_series_oracle(self):
        expected = RationalPolynomial.from_coefficients(
            [F(-1, 2), 0, F(5, 2), 0, F(-5, 2), 1]
        )
        assert gf_euler_poly_oracle(5) == expected
        assert euler_polynomial(5) == expected

    @pytest.mark.parametrize("n", range(9))
    def test_table_matches_series_division(self, n):
        assert euler_polynomial(n) == gf_euler_poly_oracle(n)


class TestEulerNumbers:
    def test_small_values(self):
        assert [euler_number(n) for n in range(5)] == [1, 0, -1, 0, 5]

    @pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 21])
    def test_odd_are_zero(self, n):
        assert euler_number(n) == 0

    def test_e6_against_series_oracle(self):
        assert gf_euler_number_oracle(6) == -61
        assert euler_number(6) == -61

    @pytest.mark.parametrize("n", range(13))
    def test_table_matches_series_division(self, n):
        assert euler_number(n) == gf_euler_number_oracle(n)

    def test_always_integral(self):
        for n in range(30):
            assert euler_number(n).denominator == 1


class TestBernoulli:
    def test_first_polynomials(self):
        assert bernoulli_polynomial(0) == RationalPolynomial.from_coefficients([1])
        assert bernoulli_polynomial(1) == RationalPolynomial.from_coefficients([-HALF, 1])
        assert bernoulli_polynomial(3) == RationalPolynomial.from_coefficients(
            [0, HALF, F(-3, 2), 1]
        )

    def test_b3_quarter_values(self):
        b3 = bernoulli_polynomial(3)
        assert b3(F(1, 4)) == F(3, 64)
        assert b3(F(3, 4)) == F(-3, 64)

    @pytest.mark.parametrize("n", range(10))
    def test_polys_match_mean_zero_oracle(self, n):
        assert bernoulli_polynomial(n) == bernoulli_poly_oracle(n)

    def test_numbers_match_akiyama_tanigawa(self):
        oracle = akiyama_tanigawa_bernoulli(16)
        assert [bernoulli_number(n) for n in range(17)] == oracle

    def test_derivative_relation(self):
        for n in range(1, 12):
            assert bernoulli_polynomial(n).derivative() == n * bernoulli_polynomial(n - 1)


class TestGeneralizedBernoulliChi4:
    def test_odd_values(self):
        assert generalized_bernoulli_chi4(1) == F(-1, 2)
        assert generalized_bernoulli_chi4(3) == F(3, 2)
        assert generalized_bernoulli_chi4(5) == F(-25, 2)

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_even_values_vanish(self, n):
        assert generalized_bernoulli_chi4(n) == 0

    def test_requires_positive_index(self):
        with pytest.raises(ValueError):
            generalized_bernoulli_chi4(0)


class TestTables:
    def test_euler_table_invariants(self):
        t = EulerTable()
        t.ensure(12)
        assert t.polys[0] == RationalPolynomial.from_coefficients([1])
        assert t.polys[1] == RationalPolynomial.from_coefficients([-HALF, 1])
        for n in range(13):
            assert t.numbers[n] == 2**n * t.polys[n](HALF)
            if n % 2 == 1:
                assert t.numbers[n] == 0

    def test_bernoulli_table_growth_is_idempotent(self):
        t = BernoulliTable()
        t.ensure(5)
        five = list(t.numbers)
        t.ensure(9)
        assert t.numbers[:6] == five

    def test_concurrent_table_growth(self):
        import threading

        t = EulerTable()
        b = BernoulliTable()
        errors = []

        def hammer(n):
            try:
                assert t.number(n) == 2**n * t.poly(n)(HALF)
                assert b.poly(n).coefficient(n) == 1 or n == 0
            except Exception as exc:  # surfaced after join
                errors.append(exc)

        threads = [threading.Thread(target=hammer, args=(n,)) for n in (40, 35, 30, 25, 40, 35)]
        for th in threads:
            th.start()
        for th in threads:
            th.join()
        assert not errors
        assert t.numbers == [euler_number(n) for n in range(41)]


class TestGfCoefficientCheck:
    def test_constant_and_linear_terms(self):
        assert float(gf_coefficient_check(0, 10).value) < 1e-5
        assert float(gf_coefficient_check(1, 10).value) < 1e-5

    def test_n4_at_30_digits(self):
        assert float(gf_coefficient_check(4, 30).value) < 1e-20

    def test_all_up_to_12(self):
        for n in range(13):
            assert float(gf_coefficient_check(n, 30).value) < 1e-20

    def test_rejects_low_precision(self):
        with pytest.raises(ValueError):
            gf_coefficient_check(4, 5)


class TestIdentitySuite:
    def test_reference_run_passes(self):
        report = run_identity_suite(10, 5, 42)
        assert report.all_passed
        ids = [r.identity_id for r in report.results]
        assert ids == [
            "1.1", "1.2", "1.3", "1.4", "1.5", "1.6",
            "bridge_euler_bernoulli", "bridge_chi4",
        ]

    def test_degenerate_run_passes(self):
        assert run_identity_suite(0, 1, 7).all_passed

    def test_deterministic_for_fixed_seed(self):
        a = run_identity_suite(6, 4, 99).to_json()
        b = run_identity_suite(6, 4, 99).to_json()
        assert a == b

    def test_corrupted_table_fails_on_power_identity(self):
        t = EulerTable()
        t.ensure(10)
        t.numbers[4] = F(6)
        report = run_identity_suite(10, 5, 42, euler=t)
        assert not report.all_passed
        failing = {r.identity_id for r in report.results if not r.passed}
        assert failing == {"1.2"}
        failure = next(r for r in report.results if not r.passed)
        assert failure.first_failure == {"n": 4, "x": None}

    def test_report_json_schema(self):
        payload = json.loads(run_identity_suite(4, 2, 5).to_json_str())
        assert set(payload) == {"nmax", "trials", "seed", "all_passed", "identities"}
        for entry in payload["identities"]:
            assert set(entry) == {"identity_id", "instances", "passed", "first_failure"}
            assert entry["first_failure"] is None or set(entry["first_failure"]) == {"n", "x"}


class TestIdentityProperties:
    """The classical identities at hypothesis-chosen rational points."""

    @given(st.integers(min_value=0, max_value=14), rationals)
    @settings(max_examples=60, deadline=None)
    def test_reflection(self, n, x):
        p = euler_polynomial(n)
        assert p(1 - x) == (-1) ** n * p(x)

    @given(st.integers(min_value=0, max_value=14), rationals)
    @settings(max_examples=60, deadline=None)
    def test_shift_sum(self, n, x):
        p = euler_polynomial(n)
        assert p(x + 1) + p(x) == 2 * x**n

    @given(st.integers(min_value=0, max_value=20))
    @settings(max_examples=30, deadline=None)
    def test_number_from_half_point(self, n):
        assert euler_number(n) == 2**n * euler_polynomial(n)(HALF)

    @given(st.integers(min_value=0, max_value=12))
    @settings(max_examples=20, deadline=None)
    def test_half_point_vs_chi4(self, k):
        lhs = euler_polynomial(2 * k)(HALF)
        rhs = -generalized_bernoulli_chi4(2 * k + 1) / ((2 * k + 1) * F(2) ** (2 * k - 1))
        assert lhs == rhs

    @given(st.integers(min_value=1, max_value=16))
    @settings(max_examples=20, deadline=None)
    def test_euler_bernoulli_bridge(self, k):
        bk = bernoulli_polynomial(k)
        rhs = F(2**k, k) * (bk.compose_affine(HALF, HALF) - bk.compose_affine(HALF, 0))
        assert euler_polynomial(k - 1) == rhs
