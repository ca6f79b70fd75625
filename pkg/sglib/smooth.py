"""Smooth and compound generating sequences.

For G = (g_0, ..., g_k) let d_i = gcd(g_0..g_i) and c_i = d_{i-1} / d_i.
G is smooth when every c_i * g_i lies in <g_0, ..., g_{i-1}>. A smooth G with
d_k = 1 gives every integer a unique expansion n = sum n_i g_i with
0 <= n_i < c_i for i >= 1, and n_0 decides membership: n_0 < 0 means a gap,
n_0 = 0 an element of Ap(S; g_0), n_0 > 0 any other element.
"""

import itertools
import logging
import math
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Optional

from .errors import (
    EmptySequence,
    IndexOutOfRange,
    InternalError,
    InputError,
    NotCompoundInput,
    NotCoprime,
    NotSmooth,
    SequenceTooLongForSetSearch,
    UnsuitablePair,
    ZeroEntry,
)
from .identity import TestFunction, evaluate_sum
from .schemas import AperySet, DigitRepresentation, Membership, SmoothAnalysis, SuitablePair
from .semigroup import make_semigroup
from .utils import check_int_sequence

logger = logging.getLogger(__name__)

SET_SEARCH_LIMIT = 8


def _validate_sequence(seq: Iterable[int]) -> tuple[int, ...]:
    values = check_int_sequence(seq, "sequence entries")
    if not values:
        raise EmptySequence()
    for i, g in enumerate(values):
        if g <= 0:
            raise ZeroEntry(i, g)
    return values


def prefix_gcds(seq: Sequence[int]) -> tuple[int, ...]:
    return tuple(itertools.accumulate(seq, math.gcd))


def analyze_sequence(seq: Iterable[int]) -> SmoothAnalysis:
    """Compute d and c values and certify c_i * g_i in <G_{i-1}> for each i.

    Membership is decided in the scaled semigroup
    <g_0/d_{i-1}, ..., g_{i-1}/d_{i-1}>, whose generators are coprime.
    """
    values = _validate_sequence(seq)
    d = prefix_gcds(values)
    c = tuple(d[i - 1] // d[i] for i in range(1, len(values)))
    certificates: list[tuple[int, ...]] = []
    for i in range(1, len(values)):
        scale = d[i - 1]
        target = c[i - 1] * values[i] // scale
        prefix = [g // scale for g in values[:i]]
        scaled = make_semigroup(prefix)
        combo = scaled.witness(target)
        if combo is None:
            logger.debug(f"{values}: c_{i} * g_{i} not in the prefix semigroup")
            return SmoothAnalysis(
                sequence=values,
                d_values=d,
                c_values=c,
                is_smooth=False,
                first_failure=i,
            )
        # witness() is indexed by the sorted, deduplicated generators
        by_value = dict(zip(scaled.generators, combo))
        cert = []
        for g in prefix:
            cert.append(by_value.pop(g, 0))
        certificates.append(tuple(cert))
    return SmoothAnalysis(
        sequence=values,
        d_values=d,
        c_values=c,
        is_smooth=True,
        certificates=tuple(certificates),
    )


def verify_certificates(analysis: SmoothAnalysis) -> bool:
    """Every certificate is non-negative and sums to c_i * g_i."""
    if not analysis.is_smooth:
        return False
    seq = analysis.sequence
    for i, cert in enumerate(analysis.certificates, start=1):
        if len(cert) != i or any(w < 0 for w in cert):
            return False
        if sum(w * g for w, g in zip(cert, seq)) != analysis.c(i) * seq[i]:
            return False
    return True


# --- compound sequences -------------------------------------------------------

def _first_unsuitable(a: Sequence[int], b: Sequence[int]) -> Optional[tuple[int, int, int]]:
    for i in range(1, len(a) + 1):
        for j in range(1, i + 1):
            g = math.gcd(a[i - 1], b[j - 1])
            if g != 1:
                return i, j, g
    return None


def make_suitable_pair(a: Iterable[int], b: Iterable[int]) -> SuitablePair:
    """Validate gcd(a_i, b_j) = 1 for all i >= j (1-indexed)."""
    a = check_int_sequence(a, "A entries")
    b = check_int_sequence(b, "B entries")
    if len(a) != len(b):
        raise InputError(f"A and B must have equal length, got {len(a)} and {len(b)}")
    for v in a + b:
        if v <= 0:
            raise InputError(f"suitable pair entries must be positive, got {v}")
    bad = _first_unsuitable(a, b)
    if bad is not None:
        raise UnsuitablePair(*bad)
    return SuitablePair(a=a, b=b)


def compound_from_pair(pair: SuitablePair) -> tuple[int, ...]:
    """g_i = b_1 ... b_i * a_{i+1} ... a_k."""
    pair = make_suitable_pair(pair.a, pair.b)
    seq = tuple(
        math.prod(pair.b[:i]) * math.prod(pair.a[i:]) for i in range(pair.k + 1)
    )
    if math.gcd(*seq) != 1:
        raise InternalError(f"compound sequence {seq} is not coprime")
    return seq


def detect_compound(seq: Iterable[int]) -> Optional[SuitablePair]:
    """Recover (A, B) from consecutive gcds; None when seq is not compound in this order."""
    values = _validate_sequence(seq)
    a, b = [], []
    for prev, cur in zip(values, values[1:]):
        g = math.gcd(prev, cur)
        a.append(prev // g)
        b.append(cur // g)
    if _first_unsuitable(a, b) is not None:
        return None
    pair = SuitablePair(a=tuple(a), b=tuple(b))
    if compound_from_pair(pair) != values:
        return None
    return pair


def _ordering_search(elements: Iterable[int]) -> list[tuple[int, ...]]:
    values = sorted(set(_validate_sequence(elements)))
    if len(values) > SET_SEARCH_LIMIT:
        raise SequenceTooLongForSetSearch(len(values), SET_SEARCH_LIMIT)
    return list(itertools.permutations(values))


def detect_compound_set(
    elements: Iterable[int],
) -> Optional[tuple[tuple[int, ...], SuitablePair]]:
    """First ordering (lexicographic) of a set that is a compound sequence."""
    for order in _ordering_search(elements):
        pair = detect_compound(order)
        if pair is not None:
            return order, pair
    return None


def detect_smooth_set(elements: Iterable[int]) -> Optional[SmoothAnalysis]:
    """First ordering (lexicographic) of a set that is a smooth sequence."""
    for order in _ordering_search(elements):
        analysis = analyze_sequence(order)
        if analysis.is_smooth:
            return analysis
    return None


def permute_rho(
    compound_seq: Iterable[int], j: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """rho_j(G) = (g_j, ..., g_0, g_{j+1}, ..., g_k) with c values (b_j..b_1, a_{j+1}..a_k)."""
    values = _validate_sequence(compound_seq)
    pair = detect_compound(values)
    if pair is None:
        raise NotCompoundInput(values)
    k = pair.k
    if not 0 <= j <= k:
        raise IndexOutOfRange(j, k)
    permuted = values[j::-1] + values[j + 1:]
    c_values = tuple(reversed(pair.b[:j])) + pair.a[j:]
    analysis = analyze_sequence(permuted)
    if not analysis.is_smooth or analysis.c_values != c_values:
        raise InternalError(
            f"rho_{j}{values} = {permuted} should be smooth with c = {c_values}, "
            f"got smooth={analysis.is_smooth}, c = {analysis.c_values}"
        )
    return permuted, c_values


# --- digit representations ----------------------------------------------------

def _require_free(analysis: SmoothAnalysis) -> None:
    if not analysis.is_smooth:
        raise NotSmooth(analysis.sequence, analysis.first_failure)
    if analysis.gcd != 1:
        raise NotCoprime(analysis.gcd)


def unique_representation(analysis: SmoothAnalysis, n: int) -> DigitRepresentation:
    """Extract n_k, ..., n_1 by modular inverses, then n_0 = remainder / g_0.

    After removing the digits above i, the remainder r is a combination of
    g_0..g_i, so r / d_i = n_i * (g_i / d_i) (mod c_i).
    """
    _require_free(analysis)
    seq, d = analysis.sequence, analysis.d_values
    digits = [0] * len(seq)
    rest = n
    for i in range(analysis.k, 0, -1):
        c_i = analysis.c(i)
        if c_i > 1:
            inverse = pow(seq[i] // d[i] % c_i, -1, c_i)
            digits[i] = (rest // d[i]) * inverse % c_i
            rest -= digits[i] * seq[i]
    q, r = divmod(rest, seq[0])
    if r:
        raise InternalError(f"digit extraction for {n} left remainder {r}")
    digits[0] = q
    return DigitRepresentation(n=n, digits=tuple(digits), sequence=seq)


def classify(analysis: SmoothAnalysis, n: int) -> Membership:
    lead = unique_representation(analysis, n).digits[0]
    if lead < 0:
        return Membership.NOT_IN_SEMIGROUP
    if lead == 0:
        return Membership.IN_APERY
    return Membership.IN_SEMIGROUP


def apery_digit_tuples(analysis: SmoothAnalysis) -> Iterable[tuple[int, ...]]:
    return itertools.product(*(range(c) for c in analysis.c_values))


def explicit_apery(analysis: SmoothAnalysis) -> AperySet:
    """Ap(S; g_0) = { sum n_i g_i : 0 <= n_i < c_i }."""
    _require_free(analysis)
    g0 = analysis.sequence[0]
    tail = analysis.sequence[1:]
    elements: list[Optional[int]] = [None] * g0
    for digits in apery_digit_tuples(analysis):
        w = sum(n_i * g_i for n_i, g_i in zip(digits, tail))
        if elements[w % g0] is not None:
            raise InternalError(f"two Apery candidates share residue {w % g0} mod {g0}")
        elements[w % g0] = w
    if any(w is None for w in elements):
        raise InternalError(f"explicit Apery set of {analysis.sequence} misses a residue")
    full = tuple(int(w) for w in elements)
    return AperySet(
        modulus=g0, elements=full, below_t=tuple(sorted(w for w in full if w < g0))
    )


def compound_representation(pair: SuitablePair, j: int, n: int) -> DigitRepresentation:
    """Digits of n on the compound sequence with g_j as the unbounded coordinate.

    0 <= n_i < b_{i+1} for i < j and 0 <= n_i < a_i for i > j; n is in S iff
    n_j >= 0, and in Ap(S; g_j) iff n_j = 0.
    """
    seq = compound_from_pair(pair)
    permuted, _ = permute_rho(seq, j)
    rep = unique_representation(analyze_sequence(permuted), n)
    # position i of rho_j(G) holds g_{j-i} for i <= j
    digits = list(rep.digits)
    digits[: j + 1] = reversed(digits[: j + 1])
    return DigitRepresentation(n=n, digits=tuple(digits), sequence=seq, lead_index=j)


def frobenius_closed(analysis: SmoothAnalysis) -> int:
    """F = -g_0 + sum (c_i - 1) g_i for a free semigroup."""
    _require_free(analysis)
    seq = analysis.sequence
    return -seq[0] + sum((analysis.c(i) - 1) * seq[i] for i in range(1, len(seq)))


def genus_closed(analysis: SmoothAnalysis) -> int:
    """g = (F + 1) / 2 for a free semigroup."""
    value = Fraction(frobenius_closed(analysis) + 1, 2)
    if value.denominator != 1:
        raise InternalError(f"genus of {analysis.sequence} is not integral: {value}")
    return value.numerator


def smooth_identity_rhs(analysis: SmoothAnalysis, f: TestFunction) -> Fraction:
    """sum over digit tuples of f(sum n_i g_i) minus sum_{n < g_0} f(n)."""
    ap = explicit_apery(analysis)
    return evaluate_sum(f, ap.elements) - evaluate_sum(f, range(analysis.sequence[0]))


def compound_identity_rhs(pair: SuitablePair, j: int, f: TestFunction) -> Fraction:
    """Right side of the identity with t = g_j, using the Apéry set of rho_j(G)."""
    seq = compound_from_pair(pair)
    permuted, _ = permute_rho(seq, j)
    return smooth_identity_rhs(analyze_sequence(permuted), f)
