"""Tests for the Apéry-set identity, genus recovery and Hilbert series."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sglib import identity as identity_module
from sglib.checks import AperySetEqualities, HilbertSeriesCheck, TuenterAperyIdentity
from sglib.errors import InvalidTestFunction, ModulusNotInSemigroup
from sglib.identity import (
    FunctionKind,
    TestFunction,
    expand_series,
    gap_polynomial,
    genus_from_identity,
    hilbert_agrees,
    hilbert_series,
    identity_rhs_without_zero,
    identity_sides,
    indicator_series,
    numerator_coefficients,
    standard_family,
    two_generator_rhs,
    x,
)
from sglib.semigroup import make_semigroup


class TestTestFunction:
    def test_polynomial_strips_trailing_zeros(self):
        f = TestFunction.polynomial([1, 2, 0, 0])
        assert f.coefficients == (Fraction(1), Fraction(2))
        assert f(3) == 7

    def test_rational_coefficients(self):
        f = TestFunction.polynomial([0, Fraction(1, 2)])
        assert f(3) == Fraction(3, 2)
        assert not f.is_integral

    def test_monomial(self):
        assert TestFunction.monomial(3)(2) == 8
        assert TestFunction.monomial(0)(0) == 1

    def test_exponential(self):
        assert TestFunction.exponential(2)(10) == 1024
        assert TestFunction.exponential(Fraction(1, 2))(3) == Fraction(1, 8)

    def test_signed_monomial(self):
        f = TestFunction.signed_monomial(2)
        assert f(3) == -9
        assert f(4) == 16

    @pytest.mark.parametrize(
        "spec, kind",
        [
            ("poly:1,0,3", FunctionKind.POLYNOMIAL),
            ("mono:2", FunctionKind.POLYNOMIAL),
            ("exp:1/3", FunctionKind.EXPONENTIAL),
            ("signed:1", FunctionKind.SIGNED_MONOMIAL),
        ],
    )
    def test_parse(self, spec, kind):
        assert TestFunction.parse(spec).kind is kind

    @pytest.mark.parametrize("spec", ["", "cubic:3", "mono:-1", "exp:0", "poly:1,,2", "exp:1/0"])
    def test_parse_rejects(self, spec):
        with pytest.raises(InvalidTestFunction):
            TestFunction.parse(spec)

    def test_standard_family(self):
        family = standard_family()
        assert len(family) == 11
        assert all(f.is_integral for f in family)


class TestIdentitySides:
    def test_linear_example(self):
        report = identity_sides(make_semigroup([3, 5]), 3, TestFunction.monomial(1))
        assert report.lhs == 12
        assert report.rhs == 12
        assert report.rhs_congruence_form == 12
        assert report.holds

    def test_constant_function(self):
        report = identity_sides(make_semigroup([4, 6, 9]), 6, TestFunction.monomial(0))
        assert report.lhs == 0
        assert report.rhs == 0

    def test_square_example(self):
        report = identity_sides(make_semigroup([2, 3]), 2, TestFunction.monomial(2))
        assert report.lhs == 8
        assert report.rhs == 8

    def test_modulus_outside_semigroup(self):
        with pytest.raises(ModulusNotInSemigroup):
            identity_sides(make_semigroup([3, 5]), 7, TestFunction.monomial(1))

    def test_exponential_is_exact(self):
        S = make_semigroup([5, 7])
        report = identity_sides(S, 7, TestFunction.exponential(Fraction(2, 3)))
        assert isinstance(report.lhs, Fraction)
        assert report.holds

    def test_rhs_without_zero(self):
        S = make_semigroup([4, 6, 9])
        for f in standard_family():
            assert identity_rhs_without_zero(S, 9, f) == identity_sides(S, 9, f).rhs

    def test_two_generator_form(self):
        S = make_semigroup([3, 5])
        for f in standard_family():
            assert two_generator_rhs(3, 5, f) == identity_sides(S, 3, f).rhs
            assert two_generator_rhs(5, 3, f) == identity_sides(S, 5, f).rhs

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(st.integers(2, 30), min_size=2, max_size=4).filter(lambda g: math.gcd(*g) == 1),
        st.integers(1, 60),
        st.sampled_from(standard_family()),
    )
    def test_holds_for_random_semigroups(self, generators, t, f):
        S = make_semigroup(generators)
        if not S.contains(t):
            t = S.generators[-1]
        assert identity_sides(S, t, f).holds


class TestGenusFromIdentity:
    @pytest.mark.parametrize(
        "generators, t, genus",
        [([3, 5], 3, 4), ([4, 6, 9], 6, 6), ([1], 1, 0), ([6, 10, 11], 10, 13)],
    )
    def test_examples(self, generators, t, genus):
        S = make_semigroup(generators)
        assert genus_from_identity(S, t) == genus
        assert S.gaps().genus == genus


class TestHilbertSeries:
    def test_two_three(self):
        series = hilbert_series(make_semigroup([2, 3]), 2)
        assert numerator_coefficients(series) == [1, 0, 0, 1]
        assert series.denominator_exponent == 2

    def test_three_five(self):
        series = hilbert_series(make_semigroup([3, 5]), 3)
        assert series.numerator.as_expr() == 1 + x**5 + x**10

    def test_full_semigroup(self):
        series = hilbert_series(make_semigroup([1]), 1)
        assert numerator_coefficients(series) == [1]
        assert expand_series(series, 5) == [1] * 6

    def test_numerator_has_t_unit_terms(self):
        series = hilbert_series(make_semigroup([4, 6, 9]), 9)
        coeffs = numerator_coefficients(series)
        assert sum(coeffs) == 9
        assert set(coeffs) <= {0, 1}
        assert coeffs[0] == 1

    def test_gap_polynomial(self):
        assert gap_polynomial(make_semigroup([2, 3])).as_expr() == x
        assert gap_polynomial(make_semigroup([3, 5])).as_expr() == x + x**2 + x**4 + x**7
        assert gap_polynomial(make_semigroup([1])).is_zero

    def test_expansion_matches_indicator(self):
        S = make_semigroup([3, 5])
        assert expand_series(hilbert_series(S, 5), 12) == indicator_series(S, 12)
        assert indicator_series(S, 8) == [1, 0, 0, 1, 0, 1, 1, 0, 1]

    @pytest.mark.parametrize("generators, t, degree", [([3, 5], 3, 10), ([1], 1, 0), ([1], 4, 3)])
    def test_agreement_checked_through_frobenius_plus_t(self, monkeypatch, generators, t, degree):
        seen = []

        def recording(S, upto):
            seen.append(upto)
            return indicator_series(S, upto)

        monkeypatch.setattr(identity_module, "indicator_series", recording)
        assert hilbert_agrees(make_semigroup(generators), t)
        assert seen == [degree]

    @pytest.mark.parametrize("generators", [[2, 3], [3, 5], [4, 6, 9], [5, 7, 11], [1]])
    def test_agrees_for_every_generator(self, generators):
        S = make_semigroup(generators)
        for t in S.generators:
            assert hilbert_agrees(S, t)


class TestIdentitySuite:
    """Seeded random semigroups with up to four generators no larger than 30."""

    def test_identity_on_hundred_semigroups(self):
        check = TuenterAperyIdentity()
        for i in range(100):
            rng = random.Random(f"identity:{i}")
            result = check.apply(check.sample(rng))
            assert result.success, result.payload

    def test_set_equalities_on_random_semigroups(self):
        check = AperySetEqualities()
        for i in range(100):
            result = check.apply(check.sample(random.Random(f"sets:{i}")))
            assert result.success, result.payload

    def test_hilbert_on_random_semigroups(self):
        check = HilbertSeriesCheck()
        for i in range(100):
            result = check.apply(check.sample(random.Random(f"hilbert:{i}")))
            assert result.success, result.payload
