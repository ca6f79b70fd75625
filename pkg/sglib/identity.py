"""Both sides of the Apéry-set identity and its genus / Hilbert-series consequences.

For a semigroup S with gaps NR and a nonzero t in S, every f on N0 satisfies

    sum_{n in NR} [f(n+t) - f(n)] = sum_{n in Ap(S;t)} f(n) - sum_{n=0}^{t-1} f(n).

Functions are drawn from three exactly-evaluable families (`TestFunction`).
"""

import logging
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from sympy import Poly, Symbol

from .errors import IdentityViolation, InvalidTestFunction
from .schemas import HilbertSeries, IdentityReport
from .semigroup import NumericalSemigroup
from .utils import Rational, exact_int

logger = logging.getLogger(__name__)

x = Symbol("x")


class FunctionKind(Enum):
    POLYNOMIAL = "poly"
    EXPONENTIAL = "exp"
    SIGNED_MONOMIAL = "signed"


@dataclass(frozen=True)
class TestFunction:
    """f(n) as a rational polynomial, an exponential z**n, or (-1)**n * n**m.

    Build instances with `polynomial`, `monomial`, `exponential` or
    `signed_monomial`; they enforce the canonical forms.
    """
    kind: FunctionKind
    coefficients: tuple[Fraction, ...] = ()
    base: Fraction = Fraction(1)
    exponent: int = 0

    __test__ = False  # not a pytest class

    @classmethod
    def polynomial(cls, coefficients: Iterable[Rational]) -> "TestFunction":
        """Coefficients in ascending degree; trailing zeros are dropped."""
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(FunctionKind.POLYNOMIAL, coefficients=tuple(coeffs))

    @classmethod
    def monomial(cls, m: int) -> "TestFunction":
        if m < 0:
            raise InvalidTestFunction(f"monomial degree must be >= 0, got {m}")
        return cls.polynomial([0] * m + [1])

    @classmethod
    def exponential(cls, base: Rational) -> "TestFunction":
        z = Fraction(base)
        if z == 0:
            raise InvalidTestFunction("exponential base must be nonzero")
        return cls(FunctionKind.EXPONENTIAL, base=z)

    @classmethod
    def signed_monomial(cls, m: int) -> "TestFunction":
        if m < 0:
            raise InvalidTestFunction(f"monomial degree must be >= 0, got {m}")
        return cls(FunctionKind.SIGNED_MONOMIAL, exponent=m)

    @classmethod
    def parse(cls, spec: str) -> "TestFunction":
        """Parse ``poly:c0,c1,...``, ``mono:m``, ``exp:z`` or ``signed:m``."""
        match = re.fullmatch(r"\s*(poly|mono|exp|signed)\s*:\s*(.+?)\s*", spec)
        if not match:
            raise InvalidTestFunction(f"cannot parse test function {spec!r}")
        kind, arg = match.groups()
        try:
            if kind == "poly":
                return cls.polynomial(Fraction(c.strip()) for c in arg.split(","))
            if kind == "exp":
                return cls.exponential(Fraction(arg))
            degree = int(arg)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidTestFunction(f"cannot parse test function {spec!r}") from e
        if kind == "mono":
            return cls.monomial(degree)
        return cls.signed_monomial(degree)

    @property
    def is_integral(self) -> bool:
        if self.kind is FunctionKind.POLYNOMIAL:
            return all(c.denominator == 1 for c in self.coefficients)
        if self.kind is FunctionKind.EXPONENTIAL:
            return self.base.denominator == 1
        return True

    def __call__(self, n: int) -> Rational:
        if self.kind is FunctionKind.SIGNED_MONOMIAL:
            v = n ** self.exponent
            return -v if n & 1 else v
        if self.kind is FunctionKind.EXPONENTIAL:
            if self.base.denominator == 1:
                return self.base.numerator ** n
            return self.base ** n
        total: Rational = 0
        for c in reversed(self.coefficients):
            total = total * n + (c.numerator if c.denominator == 1 else c)
        return total

    def describe(self) -> str:
        if self.kind is FunctionKind.SIGNED_MONOMIAL:
            return f"(-1)^n n^{self.exponent}"
        if self.kind is FunctionKind.EXPONENTIAL:
            return f"{self.base}^n"
        terms = [f"{c}*n^{i}" for i, c in enumerate(self.coefficients) if c]
        return " + ".join(terms) or "0"


def standard_family() -> list[TestFunction]:
    """n^0..n^5, 2^n and (-1)^n n^m for m <= 3."""
    family = [TestFunction.monomial(m) for m in range(6)]
    family.append(TestFunction.exponential(2))
    family.extend(TestFunction.signed_monomial(m) for m in range(4))
    return family


def _sum(f: TestFunction, values: Iterable[int]) -> Rational:
    total: Rational = 0
    for n in values:
        total += f(n)
    return total


def _as_fraction(value: Rational) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def identity_sides(S: NumericalSemigroup, t: int, f: TestFunction) -> IdentityReport:
    """Evaluate the left side, the right side and its congruence form exactly."""
    ap = S.apery_set(t)
    nr = S.gaps().gaps
    lhs = _sum(f, (n + t for n in nr)) - _sum(f, nr)
    ap_sum = _sum(f, ap.elements)
    rhs = ap_sum - _sum(f, range(t))
    rhs_cong = ap_sum - _sum(f, (w % t for w in ap.elements))
    holds = lhs == rhs and rhs == rhs_cong
    if not holds:
        logger.error(
            f"identity fails for {S!r}, t={t}, f={f.describe()}: "
            f"lhs={lhs}, rhs={rhs}, congruence form={rhs_cong}"
        )
    return IdentityReport(
        lhs=_as_fraction(lhs),
        rhs=_as_fraction(rhs),
        rhs_congruence_form=_as_fraction(rhs_cong),
        holds=holds,
    )


def identity_rhs_without_zero(S: NumericalSemigroup, t: int, f: TestFunction) -> Fraction:
    """Right side with n = 0 removed from both sums."""
    ap = S.apery_set(t)
    value = _sum(f, (w for w in ap.elements if w != 0)) - _sum(f, range(1, t))
    return _as_fraction(value)


def two_generator_rhs(a: int, b: int, f: TestFunction) -> Fraction:
    """sum_{n=1}^{a-1} [f(nb) - f(n)], the right side for S = <a, b> and t = a."""
    value = _sum(f, (n * b for n in range(1, a))) - _sum(f, range(1, a))
    return _as_fraction(value)


def genus_from_identity(S: NumericalSemigroup, t: int) -> int:
    """With f(n) = n the left side is t * #NR; solve for #NR."""
    report = identity_sides(S, t, TestFunction.monomial(1))
    if not report.holds:
        raise IdentityViolation(f"identity fails for {S!r} at t={t} with f(n)=n")
    return exact_int(report.rhs / t, "genus")


def _poly_from_exponents(exponents: Iterable[int]) -> Poly:
    terms: dict[tuple[int], int] = {}
    for e in exponents:
        terms[(e,)] = terms.get((e,), 0) + 1
    if not terms:
        return Poly(0, x, domain="ZZ")
    return Poly.from_dict(terms, x, domain="ZZ")


def hilbert_series(S: NumericalSemigroup, t: int) -> HilbertSeries:
    """H_S(x) = (sum_{n in Ap(S;t)} x^n) / (1 - x^t)."""
    ap = S.apery_set(t)
    return HilbertSeries(
        numerator=_poly_from_exponents(ap.elements), denominator_exponent=t
    )


def gap_polynomial(S: NumericalSemigroup) -> Poly:
    """sum_{n in NR} x^n."""
    return _poly_from_exponents(S.gaps().gaps)


def poly_coefficients(p: Poly, degree: int) -> list[int]:
    """Ascending coefficients of p from x^0 through x^degree."""
    coeffs = [0] * (degree + 1)
    for (e,), c in p.as_dict().items():
        if e <= degree:
            coeffs[e] = int(c)
    return coeffs


def expand_series(series: HilbertSeries, degree: int) -> list[int]:
    """Coefficients of numerator / (1 - x^t) through x^degree."""
    t = series.denominator_exponent
    geometric = _poly_from_exponents(range(0, degree + 1, t))
    return poly_coefficients(series.numerator * geometric, degree)


def indicator_series(S: NumericalSemigroup, degree: int) -> list[int]:
    """Coefficients of 1/(1-x) - sum_{n in NR} x^n through x^degree."""
    gap_coeffs = poly_coefficients(gap_polynomial(S), degree)
    return [1 - c for c in gap_coeffs]


def hilbert_agrees(S: NumericalSemigroup, t: int) -> bool:
    """Compare the Apéry form of H_S with the indicator series through F(S)+t."""
    degree = S.gaps().frobenius + t
    expanded = expand_series(hilbert_series(S, t), degree)
    return expanded == indicator_series(S, degree)


def numerator_coefficients(series: HilbertSeries) -> list[int]:
    return poly_coefficients(series.numerator, series.numerator.degree())


def evaluate_sum(f: TestFunction, values: Sequence[int]) -> Fraction:
    return _as_fraction(_sum(f, values))

