"""Power and alternating power Sylvester sums.

S_m(G) = sum of n**m over the gaps of <G> and T_m(G) = sum of (-1)**n n**m.
For smooth G with gcd 1 the sums for m <= 2 have closed forms in the
c values, S_0(G) and S_0(G**2); for two generators the alternating sums obey
a recurrence in m. Everything is checked against gap enumeration.
"""

import logging
import math
from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from sympy import Symbol
from sympy.polys.appellseqs import bernoulli_poly, euler_poly

from .errors import (
    EvenSecondArgument,
    InputError,
    NotCoprime,
    NotSmooth,
    OracleMismatch,
    RelationViolation,
    UnsupportedPower,
)
from .schemas import PowerSequence, SmoothAnalysis, SylvesterReport
from .semigroup import DEFAULT_ENUMERATION_CAP, NumericalSemigroup, make_semigroup
from .smooth import analyze_sequence, frobenius_closed
from .utils import Rational, check_int_sequence, exact_int, power_sum

logger = logging.getLogger(__name__)

CLOSED_FORM_POWERS = (0, 1, 2)

_x = Symbol("x")


def power_sequence(seq: Iterable[int], e: int) -> PowerSequence:
    base = check_int_sequence(seq, "sequence entries")
    if e < 1:
        raise InputError(f"exponent must be >= 1, got {e}")
    return PowerSequence(base=base, exponent=e, result=tuple(g ** e for g in base))


@lru_cache(maxsize=256)
def power_genus(seq: tuple[int, ...], e: int) -> int:
    """Genus of <G**e>, from its Apéry set at the smallest generator."""
    powered = make_semigroup(power_sequence(seq, e).result)
    return powered.genus_via_apery(powered.multiplicity)


def _check_power(m: int) -> None:
    if m not in CLOSED_FORM_POWERS:
        raise UnsupportedPower(m)


def _require_free(analysis: SmoothAnalysis) -> None:
    if not analysis.is_smooth:
        raise NotSmooth(analysis.sequence, analysis.first_failure)
    if analysis.gcd != 1:
        raise NotCoprime(analysis.gcd)


class _SmoothTerms(NamedTuple):
    s0: int
    s0_square: int
    J: int
    I_G: tuple[int, ...]
    cJgJ: int
    even_c_product: int
    even_correction: int  # sum over I_G of g_i**2 (c_i**2 - 1)


def _smooth_terms(analysis: SmoothAnalysis) -> _SmoothTerms:
    _require_free(analysis)
    seq = analysis.sequence
    g0 = seq[0]
    s0 = exact_int(Fraction(frobenius_closed(analysis) + 1, 2), "S_0")
    s0_square = power_genus(seq, 2)

    squares = sum((analysis.c(i) ** 2 - 1) * seq[i] ** 2 for i in range(1, len(seq)))
    if squares != 2 * s0_square + g0 ** 2 - 1:
        raise RelationViolation(
            f"{seq}: sum (c_i^2-1) g_i^2 = {squares} but "
            f"2 S_0(G^2) + g_0^2 - 1 = {2 * s0_square + g0 ** 2 - 1}"
        )

    J = next(i for i, g in enumerate(seq) if g % 2)
    I_G = tuple(i for i, g in enumerate(seq) if g % 2 == 0)
    return _SmoothTerms(
        s0=s0,
        s0_square=s0_square,
        J=J,
        I_G=I_G,
        cJgJ=analysis.c(J) * seq[J],
        even_c_product=math.prod(analysis.c(i) for i in I_G),
        even_correction=sum(seq[i] ** 2 * (analysis.c(i) ** 2 - 1) for i in I_G),
    )


def parity_indices(analysis: SmoothAnalysis) -> tuple[int, tuple[int, ...]]:
    """J (first odd position) and I_G (even positions)."""
    seq = analysis.sequence
    return (
        next(i for i, g in enumerate(seq) if g % 2),
        tuple(i for i, g in enumerate(seq) if g % 2 == 0),
    )


def sylvester_closed(analysis: SmoothAnalysis, m: int) -> int:
    """S_m(G) for m in {0, 1, 2} on a smooth coprime sequence."""
    _check_power(m)
    terms = _smooth_terms(analysis)
    s0 = Fraction(terms.s0)
    if m == 0:
        return terms.s0
    if m == 1:
        value = (s0 ** 2 - s0) / 2 + Fraction(terms.s0_square, 12)
    else:
        value = (2 * s0 - 1) / 6 * (s0 ** 2 - s0 + Fraction(terms.s0_square, 2))
    return exact_int(value, f"S_{m}")


def sylvester_s2_from_lower(s0: Rational, s1: Rational) -> Fraction:
    """S_2 as a function of S_0 and S_1."""
    s0 = Fraction(s0)
    return (2 * s0 - 1) / 3 * (3 * Fraction(s1) - s0 ** 2 + s0)


def _alternating_primary(analysis: SmoothAnalysis, m: int, terms: _SmoothTerms) -> Fraction:
    g0 = analysis.sequence[0]
    t0 = (1 - Fraction(terms.cJgJ, g0) * terms.even_c_product) / 2
    if m == 0:
        return t0
    s0 = Fraction(terms.s0)
    if m == 1:
        return ((2 * s0 - 1) * (2 * t0 - 1) - 1) / 4
    bracket = (
        6 * s0 ** 2 - 6 * s0 + 3 * terms.s0_square
        + g0 ** 2 - terms.cJgJ ** 2 - terms.even_correction
    )
    return (2 * t0 - 1) / 12 * bracket


def alternating_closed(analysis: SmoothAnalysis, m: int) -> int:
    """T_m(G) for m in {0, 1, 2}; odd g_0 results are cross-checked against the simpler forms."""
    _check_power(m)
    terms = _smooth_terms(analysis)
    value = _alternating_primary(analysis, m, terms)
    forms = odd_g0_forms(analysis)
    for key, alt in forms.items():
        if key.startswith(f"T{m}") and alt != value:
            raise RelationViolation(
                f"{analysis.sequence}: T_{m} = {value} but odd-g_0 form {key} gives {alt}"
            )
    return exact_int(value, f"T_{m}")


def t2_alternative_forms(analysis: SmoothAnalysis) -> tuple[Fraction, Fraction]:
    """T_2 rewritten through S_1, and through S_2."""
    terms = _smooth_terms(analysis)
    g0 = analysis.sequence[0]
    s0 = Fraction(terms.s0)
    t0 = _alternating_primary(analysis, 0, terms)
    tail = Fraction(g0 ** 2 - terms.cJgJ ** 2 - terms.even_correction, 12)
    s1 = sylvester_closed(analysis, 1)
    s2 = sylvester_closed(analysis, 2)
    via_s1 = (2 * t0 - 1) * (3 * s1 - s0 ** 2 + s0 + tail)
    via_s2 = (2 * t0 - 1) * (3 * s2 / (2 * s0 - 1) + tail)
    return via_s1, via_s2


def odd_g0_forms(
    analysis: SmoothAnalysis, t1_of_square: Optional[Rational] = None
) -> dict[str, Fraction]:
    """Simplified T_m forms that apply when g_0 is odd (empty dict otherwise).

    Keys ending in ``_all_odd`` are added when every term is odd. Passing
    T_1(G**2) adds the form of T_2 in terms of T_1(G) and T_1(G**2).
    """
    seq = analysis.sequence
    if seq[0] % 2 == 0:
        return {}
    terms = _smooth_terms(analysis)
    s0 = Fraction(terms.s0)
    prod = terms.even_c_product
    s2 = sylvester_closed(analysis, 2)
    forms = {
        "T0": (1 - Fraction(prod)) / 2,
        "T1": -(1 + (2 * s0 - 1) * prod) / 4,
        "T2": -(3 * s2 / (2 * s0 - 1) - Fraction(terms.even_correction, 12)) * prod,
    }
    if all(g % 2 for g in seq):
        t1 = -s0 / 2
        forms["T0_all_odd"] = Fraction(0)
        forms["T1_all_odd"] = t1
        forms["T2_all_odd"] = -s0 * (s0 - 1) / 2 - Fraction(terms.s0_square, 4)
        forms["T2_all_odd_from_S2"] = -3 * s2 / (2 * s0 - 1)
        if t1_of_square is not None:
            forms["T2_all_odd_from_T1"] = -2 * t1 ** 2 - t1 + Fraction(t1_of_square) / 2
    return forms


# --- power sums ---------------------------------------------------------------

@lru_cache(maxsize=64)
def _bernoulli(n: int):
    return bernoulli_poly(n, _x, polys=True)


@lru_cache(maxsize=64)
def _euler(n: int):
    return euler_poly(n, _x, polys=True)


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def sigma_tau(m: int, g: int) -> tuple[int, int]:
    """(sum_{n=0}^g n**m, sum_{n=0}^g (-1)**n n**m) with 0**0 = 1.

    sigma from Bernoulli polynomials, tau from Euler polynomials:
    sigma_m(g) = (B_{m+1}(g+1) - B_{m+1}(0)) / (m+1) and
    tau_m(g) = (E_m(0) + (-1)**g E_m(g+1)) / 2.
    """
    if m < 0 or g < 0:
        raise InputError(f"sigma_tau needs m, g >= 0, got m={m}, g={g}")
    b = _bernoulli(m + 1)
    sigma = (_to_fraction(b.eval(g + 1)) - _to_fraction(b.eval(0))) / (m + 1)
    e = _euler(m)
    sign = -1 if g % 2 else 1
    tau = (_to_fraction(e.eval(0)) + sign * _to_fraction(e.eval(g + 1))) / 2
    return exact_int(sigma, "sigma"), exact_int(tau, "tau")


def sums_by_enumeration(S: NumericalSemigroup, m: int) -> tuple[int, int]:
    """(S_m, T_m) summed over the enumerated gap set."""
    if m < 0:
        raise InputError(f"power must be >= 0, got {m}")
    nr = S.gaps().gaps
    return power_sum(nr, m), power_sum(nr, m, alternating=True)


# --- two generators -----------------------------------------------------------

def _check_pair(a: int, b: int) -> None:
    check_int_sequence((a, b), "generators")
    if a <= 0 or b <= 0:
        raise InputError(f"generators must be positive, got a={a}, b={b}")
    d = math.gcd(a, b)
    if d != 1:
        raise NotCoprime(d)
    if b % 2 == 0:
        raise EvenSecondArgument(b)


def wang_wang_T(a: int, b: int, m: int) -> int:
    """T_m(<a, b>) for b odd, by recurrence in m.

    2 T_m = tau_m(b-1) - a**m X_m(b-1) - sum_{i<m} C(m,i) b**(m-i) T_i,
    with X = sigma when a is even and X = tau when a is odd.
    """
    _check_pair(a, b)
    if m < 0:
        raise InputError(f"power must be >= 0, got {m}")
    a_even = a % 2 == 0
    values = [-(b - 1) // 2 if a_even else 0]
    for n in range(1, m + 1):
        sigma, tau = sigma_tau(n, b - 1)
        x = sigma if a_even else tau
        lower = sum(math.comb(n, i) * b ** (n - i) * values[i] for i in range(n))
        values.append(exact_int(Fraction(tau - a ** n * x - lower, 2), f"T_{n}"))
    return values[m]


def wang_wang_explicit(a: int, b: int, m: int) -> int:
    """Closed forms of T_0..T_2 for two generators."""
    _check_pair(a, b)
    _check_power(m)
    if a % 2 == 0:
        value = (
            Fraction(-(b - 1), 2),
            Fraction((b - 1) * (b - a * b + 1), 4),
            Fraction(a * b * (b - 1) * (a + 3 * b - 2 * a * b), 12),
        )[m]
    else:
        value = (
            Fraction(0),
            Fraction(-(a - 1) * (b - 1), 4),
            Fraction(-a * b * (a - 1) * (b - 1), 4),
        )[m]
    return exact_int(value, f"T_{m}")


# --- report -------------------------------------------------------------------

def invariant_report(
    seq: Iterable[int],
    extra_m: Iterable[int] = (),
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> SylvesterReport:
    """Closed forms next to enumerated sums, with one agreement flag per comparison.

    Raises OracleMismatch when any flag is false.
    """
    analysis = analyze_sequence(seq)
    _require_free(analysis)
    S = make_semigroup(analysis.sequence, enumeration_cap=enumeration_cap)
    gap_set = S.gaps()
    J, I_G = parity_indices(analysis)

    report = SylvesterReport(
        sequence=analysis.sequence,
        c_values=analysis.c_values,
        genus=gap_set.genus,
        frobenius=gap_set.frobenius,
        symmetric=gap_set.frobenius == 2 * gap_set.genus - 1,
        J=J,
        I_G=I_G,
    )
    agreement = report.agreement
    for m in CLOSED_FORM_POWERS:
        report.S[m] = sylvester_closed(analysis, m)
        report.T[m] = alternating_closed(analysis, m)
    for m in sorted(set(CLOSED_FORM_POWERS) | set(extra_m)):
        s_m, t_m = sums_by_enumeration(S, m)
        report.S_oracle[m] = s_m
        report.T_oracle[m] = t_m
        if m in CLOSED_FORM_POWERS:
            agreement[f"S{m}"] = report.S[m] == s_m
            agreement[f"T{m}"] = report.T[m] == t_m
        else:
            report.S[m] = s_m
            report.T[m] = t_m

    agreement["symmetric"] = report.symmetric
    agreement["frobenius"] = frobenius_closed(analysis) == gap_set.frobenius
    agreement["S2_from_lower"] = (
        sylvester_s2_from_lower(report.S[0], report.S[1]) == report.S[2]
    )
    agreement["T2_alternatives"] = all(
        form == report.T[2] for form in t2_alternative_forms(analysis)
    )
    agreement["parity"] = (report.T[0] <= 0) and (
        (report.T[0] == 0) == all(g % 2 for g in analysis.sequence)
    )
    report.meta["power_genus"] = power_genus(analysis.sequence, 2)

    failed = [key for key, ok in agreement.items() if not ok]
    if failed:
        logger.error(f"{analysis.sequence}: closed forms disagree on {failed}")
        raise OracleMismatch(report, failed)
    logger.debug(f"{analysis.sequence}: {len(agreement)} comparisons agree")
    return report
