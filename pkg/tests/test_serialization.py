import json
from fractions import Fraction

import pytest

from sglib.identity import TestFunction, hilbert_series, identity_sides
from sglib.schemas import Membership, SuitablePair
from sglib.semigroup import make_semigroup
from sglib.serialization import to_json_dict
from sglib.smooth import analyze_sequence, unique_representation
from sglib.sylvester import invariant_report, power_sequence


def test_semigroup_and_gaps():
    S = make_semigroup([5, 3])
    assert to_json_dict(S) == {"generators": [3, 5]}
    assert to_json_dict(S.gaps()) == {"gaps": [1, 2, 4, 7], "genus": 4, "frobenius": 7}


def test_apery_set():
    ap = make_semigroup([3, 5]).apery_set(3)
    assert to_json_dict(ap) == {"t": 3, "elements": [0, 10, 5]}


def test_set_equalities():
    data = to_json_dict(make_semigroup([3, 5]).set_equalities(3))
    assert data["shifted_minus_gaps"] == [5, 10]
    assert data["gaps_minus_shifted"] == [1, 2]
    assert data["holds"] is True


def test_identity_report_uses_rational_strings():
    S = make_semigroup([5, 7])
    data = to_json_dict(identity_sides(S, 5, TestFunction.exponential(Fraction(1, 2))))
    assert isinstance(data["lhs"], str)
    assert Fraction(data["lhs"]) == Fraction(data["rhs"])


def test_hilbert_series():
    data = to_json_dict(hilbert_series(make_semigroup([2, 3]), 2))
    assert data == {"t": 2, "numerator": ["1", "0", "0", "1"]}


def test_smooth_analysis():
    data = to_json_dict(analyze_sequence((4, 6, 9)))
    assert data["d"] == [4, 2, 1]
    assert data["c"] == [2, 2]
    assert data["smooth"] is True
    assert "first_failure" not in data

    failed = to_json_dict(analyze_sequence((11, 10, 6)))
    assert failed["first_failure"] == 2
    assert failed["certificates"] == []


def test_representation_and_membership():
    rep = unique_representation(analyze_sequence((4, 6, 9)), 11)
    assert to_json_dict(rep) == {"n": 11, "digits": [-1, 1, 1], "lead_index": 0}
    assert to_json_dict(Membership.IN_APERY) == "in_apery"


def test_small_types():
    assert to_json_dict(SuitablePair(a=(2, 2), b=(3, 3))) == {"a": [2, 2], "b": [3, 3]}
    assert to_json_dict(Fraction(3, 4)) == "3/4"
    assert to_json_dict(power_sequence((3, 5), 2))["result"] == [9, 25]
    assert to_json_dict(TestFunction.monomial(2))["kind"] == "poly"


def test_sylvester_report_is_json_ready():
    data = to_json_dict(invariant_report((3, 5)))
    assert data["S"] == {"0": "4", "1": "14", "2": "70"}
    assert data["T"] == {"0": "0", "1": "-2", "2": "-30"}
    assert data["frobenius"] == "7"
    assert data["J"] == 0
    assert data["I_G"] == []
    json.dumps(data)


def test_unknown_type():
    with pytest.raises(TypeError):
        to_json_dict(object())
