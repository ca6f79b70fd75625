"""Tests for gap enumeration, membership and Apéry sets."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sglib.errors import (
    EmptyGenerators,
    EnumerationCapExceeded,
    FullSemigroup,
    InputError,
    ModulusNotInSemigroup,
    NonCoprimeGenerators,
    ZeroGenerator,
    ZeroModulus,
)
from sglib.semigroup import (
    apery_set,
    contains,
    frobenius_via_apery,
    gaps,
    genus_via_apery,
    is_symmetric,
    is_symmetric_direct,
    make_semigroup,
    representable_sieve,
)

generator_lists = st.lists(st.integers(2, 30), min_size=2, max_size=4).filter(
    lambda g: math.gcd(*g) == 1
)


def brute_force_members(generators, bound):
    members = {0}
    for n in range(1, bound + 1):
        if any(n - g in members for g in generators if g <= n):
            members.add(n)
    return members


class TestConstruction:
    def test_generators_sorted_and_deduplicated(self):
        S = make_semigroup([11, 6, 10, 6])
        assert S.generators == (6, 10, 11)

    def test_non_coprime_reports_gcd(self):
        with pytest.raises(NonCoprimeGenerators) as exc:
            make_semigroup([2, 4])
        assert exc.value.gcd == 2

    def test_empty(self):
        with pytest.raises(EmptyGenerators):
            make_semigroup([])

    def test_zero_generator(self):
        with pytest.raises(ZeroGenerator):
            make_semigroup([0, 3])

    def test_input_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            make_semigroup([-3, 5])

    @pytest.mark.parametrize("bad", [[True, 3], [2.0, 3], ["3", 5]])
    def test_non_integers_rejected(self, bad):
        with pytest.raises(TypeError):
            make_semigroup(bad)

    def test_full_semigroup(self):
        S = make_semigroup([1])
        assert S.is_full
        assert S.gaps().gaps == ()

    def test_invalid_cap(self):
        with pytest.raises(ValueError):
            make_semigroup([3, 5], enumeration_cap=0)


class TestMembership:
    def test_examples(self):
        S = make_semigroup([4, 6, 9])
        assert contains(S, 5) is False
        assert contains(S, 15) is True
        assert contains(S, 0) is True
        assert contains(S, -3) is False

    def test_dunder_contains(self):
        S = make_semigroup([3, 5])
        assert 8 in S
        assert 7 not in S
        assert "8" not in S

    def test_membership_above_cap_uses_apery_set(self):
        S = make_semigroup([3, 5], enumeration_cap=10)
        assert S.contains(1000)
        assert S.contains(1001)
        assert not S.contains(7)

    def test_sieve_matches_brute_force(self):
        reach = representable_sieve((4, 6, 9), 40)
        members = brute_force_members((4, 6, 9), 40)
        assert {n for n in range(41) if reach[n]} == members

    def test_witness(self):
        S = make_semigroup([4, 6, 9])
        combo = S.witness(15)
        assert sum(c * g for c, g in zip(combo, S.generators)) == 15
        assert all(c >= 0 for c in combo)
        assert S.witness(11) is None
        assert S.witness(-1) is None

    def test_witness_ignores_cap(self):
        S = make_semigroup([3, 5], enumeration_cap=10)
        assert S.witness(1001) == (332, 1)
        assert S.witness(7) is None

    def test_witness_in_full_semigroup(self):
        assert make_semigroup([1]).witness(10**12) == (10**12,)


class TestGaps:
    @pytest.mark.parametrize(
        "generators, expected, frobenius",
        [
            ([3, 5], (1, 2, 4, 7), 7),
            ([2, 3], (1,), 1),
            ([1], (), -1),
            ([4, 6, 9], (1, 2, 3, 5, 7, 11), 11),
        ],
    )
    def test_examples(self, generators, expected, frobenius):
        gap_set = gaps(make_semigroup(generators))
        assert gap_set.gaps == expected
        assert gap_set.genus == len(expected)
        assert gap_set.frobenius == frobenius

    def test_cached(self):
        S = make_semigroup([5, 7])
        assert S.gaps() is S.gaps()

    def test_cap_exceeded(self):
        S = make_semigroup([100, 101], enumeration_cap=500)
        with pytest.raises(EnumerationCapExceeded) as exc:
            S.gaps()
        assert isinstance(exc.value, InputError)

    def test_large_frobenius_needs_doubling(self):
        S = make_semigroup([97, 101])
        assert S.gaps().frobenius == 97 * 101 - 97 - 101

    @settings(max_examples=40, deadline=None)
    @given(generator_lists)
    def test_matches_brute_force(self, generators):
        S = make_semigroup(generators)
        gap_set = S.gaps()
        bound = gap_set.frobenius + max(generators) + 1
        members = brute_force_members(S.generators, bound)
        assert gap_set.gaps == tuple(n for n in range(bound + 1) if n not in members)


class TestAperySets:
    def test_examples(self):
        assert apery_set(make_semigroup([3, 5]), 3).elements == (0, 10, 5)
        assert apery_set(make_semigroup([4, 6, 9]), 4).elements == (0, 9, 6, 15)
        assert apery_set(make_semigroup([2, 3]), 2).elements == (0, 3)

    def test_below_t(self):
        ap = apery_set(make_semigroup([4, 6, 9]), 9)
        assert ap.below_t == tuple(sorted(w for w in ap.elements if w < 9))
        assert 0 in ap.below_t

    def test_modulus_must_be_member(self):
        with pytest.raises(ModulusNotInSemigroup):
            apery_set(make_semigroup([3, 5]), 4)

    def test_zero_modulus(self):
        with pytest.raises(ZeroModulus):
            apery_set(make_semigroup([3, 5]), 0)

    def test_frobenius_examples(self):
        assert frobenius_via_apery(make_semigroup([3, 5]), 3) == 7
        assert frobenius_via_apery(make_semigroup([4, 6, 9]), 4) == 11
        assert frobenius_via_apery(make_semigroup([4, 6, 9]), 6) == 11

    def test_frobenius_of_full_semigroup(self):
        S = make_semigroup([1])
        with pytest.raises(FullSemigroup) as exc:
            frobenius_via_apery(S, 1)
        assert exc.value.frobenius == -1
        assert S.frobenius == -1

    def test_genus_examples(self):
        assert genus_via_apery(make_semigroup([3, 5]), 3) == 4
        assert genus_via_apery(make_semigroup([4, 6, 9]), 4) == 6
        assert genus_via_apery(make_semigroup([1]), 1) == 0

    @settings(max_examples=40, deadline=None)
    @given(generator_lists, st.integers(1, 60))
    def test_structure_and_t_independence(self, generators, t):
        S = make_semigroup(generators)
        if not S.contains(t):
            t = S.multiplicity
        gap_set = S.gaps()
        ap = S.apery_set(t)
        assert len(ap) == t
        assert ap.elements[0] == 0
        for r, w in enumerate(ap.elements):
            assert w % t == r
            assert S.contains(w)
            assert not S.contains(w - t)
        assert S.frobenius_via_apery(t) == gap_set.frobenius
        assert S.genus_via_apery(t) == gap_set.genus

    @settings(max_examples=40, deadline=None)
    @given(generator_lists)
    def test_set_equalities(self, generators):
        S = make_semigroup(generators)
        upper = S.gaps().frobenius + S.multiplicity
        for t in range(1, min(upper, 60) + 1):
            if S.contains(t):
                assert S.set_equalities(t).holds

    def test_set_equalities_example(self):
        eq = make_semigroup([3, 5]).set_equalities(3)
        assert eq.shifted_minus_gaps == frozenset({5, 10})
        assert eq.apery_minus_below == frozenset({5, 10})
        assert eq.gaps_minus_shifted == frozenset({1, 2})
        assert eq.interval_minus_below == frozenset({1, 2})


class TestSymmetry:
    @pytest.mark.parametrize(
        "generators, expected",
        [([3, 5], True), ([4, 6, 9], True), ([3, 5, 7], False), ([2, 3], True)],
    )
    def test_examples(self, generators, expected):
        S = make_semigroup(generators)
        assert is_symmetric(S) is expected
        assert is_symmetric_direct(S) is expected

    def test_full_semigroup_is_not_symmetric(self):
        S = make_semigroup([1])
        assert is_symmetric(S) is False
        assert S.is_full

    @settings(max_examples=40, deadline=None)
    @given(generator_lists)
    def test_frobenius_bound(self, generators):
        S = make_semigroup(generators)
        gap_set = S.gaps()
        assert gap_set.frobenius <= 2 * gap_set.genus - 1
        assert is_symmetric(S) == is_symmetric_direct(S)
