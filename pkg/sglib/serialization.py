"""JSON-ready dictionaries for the public result types.

Rationals and the large sums of a Sylvester report are emitted as decimal
strings; small structural integers (indices, generators, gaps) stay numbers.
"""

from fractions import Fraction
from functools import singledispatch
from typing import Any

from .identity import TestFunction, numerator_coefficients
from .schemas import (
    AperySet,
    DigitRepresentation,
    GapSet,
    HilbertSeries,
    IdentityReport,
    Membership,
    PowerSequence,
    SetEqualities,
    SmoothAnalysis,
    SuitablePair,
    SylvesterReport,
)
from .semigroup import NumericalSemigroup
from .utils import format_rational


@singledispatch
def to_json_dict(obj: Any) -> Any:
    raise TypeError(f"no JSON form for {type(obj).__name__}")


@to_json_dict.register
def _(obj: NumericalSemigroup) -> dict:
    return {"generators": list(obj.generators)}


@to_json_dict.register
def _(obj: GapSet) -> dict:
    return {"gaps": list(obj.gaps), "genus": obj.genus, "frobenius": obj.frobenius}


@to_json_dict.register
def _(obj: AperySet) -> dict:
    return {"t": obj.modulus, "elements": list(obj.elements)}


@to_json_dict.register
def _(obj: SetEqualities) -> dict:
    return {
        "t": obj.modulus,
        "shifted_minus_gaps": sorted(obj.shifted_minus_gaps),
        "apery_minus_below": sorted(obj.apery_minus_below),
        "gaps_minus_shifted": sorted(obj.gaps_minus_shifted),
        "interval_minus_below": sorted(obj.interval_minus_below),
        "holds": obj.holds,
    }


@to_json_dict.register
def _(obj: IdentityReport) -> dict:
    return {
        "lhs": format_rational(obj.lhs),
        "rhs": format_rational(obj.rhs),
        "rhs_congruence_form": format_rational(obj.rhs_congruence_form),
        "holds": obj.holds,
    }


@to_json_dict.register
def _(obj: HilbertSeries) -> dict:
    return {
        "t": obj.denominator_exponent,
        "numerator": [str(c) for c in numerator_coefficients(obj)],
    }


@to_json_dict.register
def _(obj: TestFunction) -> dict:
    return {"kind": obj.kind.value, "description": obj.describe()}


@to_json_dict.register
def _(obj: SmoothAnalysis) -> dict:
    out = {
        "sequence": list(obj.sequence),
        "d": list(obj.d_values),
        "c": list(obj.c_values),
        "smooth": obj.is_smooth,
        "certificates": [list(cert) for cert in obj.certificates],
    }
    if obj.first_failure is not None:
        out["first_failure"] = obj.first_failure
    return out


@to_json_dict.register
def _(obj: SuitablePair) -> dict:
    return {"a": list(obj.a), "b": list(obj.b)}


@to_json_dict.register
def _(obj: DigitRepresentation) -> dict:
    return {"n": obj.n, "digits": list(obj.digits), "lead_index": obj.lead_index}


@to_json_dict.register
def _(obj: Membership) -> str:
    return obj.value


@to_json_dict.register
def _(obj: PowerSequence) -> dict:
    return {"base": list(obj.base), "exponent": obj.exponent, "result": list(obj.result)}


@to_json_dict.register
def _(obj: Fraction) -> str:
    return format_rational(obj)


@to_json_dict.register
def _(obj: SylvesterReport) -> dict:
    return {
        "sequence": list(obj.sequence),
        "c": list(obj.c_values),
        "S": {str(m): str(v) for m, v in sorted(obj.S.items())},
        "T": {str(m): str(v) for m, v in sorted(obj.T.items())},
        "frobenius": str(obj.frobenius),
        "genus": str(obj.genus),
        "symmetric": obj.symmetric,
        "J": obj.J,
        "I_G": list(obj.I_G),
        "agreement": dict(obj.agreement),
    }
