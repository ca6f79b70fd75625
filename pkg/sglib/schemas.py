from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from sympy import Poly


@dataclass(frozen=True)
class GapSet:
    """The gaps NR of a semigroup, with genus and Frobenius number."""
    gaps: tuple[int, ...]
    genus: int
    frobenius: int


@dataclass(frozen=True)
class AperySet:
    """Ap(S;t): element `elements[r]` is the least element of S congruent to r."""
    modulus: int
    elements: tuple[int, ...]
    below_t: tuple[int, ...]

    def __contains__(self, n: object) -> bool:
        return (
            isinstance(n, int)
            and n >= 0
            and self.elements[n % self.modulus] == n
        )

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SetEqualities:
    """Both sides of the two set equalities relating NR, NR+t and Ap(S;t)."""
    modulus: int
    shifted_minus_gaps: frozenset[int]
    apery_minus_below: frozenset[int]
    gaps_minus_shifted: frozenset[int]
    interval_minus_below: frozenset[int]

    @property
    def holds(self) -> bool:
        return (
            self.shifted_minus_gaps == self.apery_minus_below
            and self.gaps_minus_shifted == self.interval_minus_below
        )


@dataclass(frozen=True)
class IdentityReport:
    lhs: Fraction
    rhs: Fraction
    rhs_congruence_form: Fraction
    holds: bool


@dataclass(frozen=True)
class HilbertSeries:
    """H_S(x) = numerator / (1 - x**denominator_exponent)."""
    numerator: Poly
    denominator_exponent: int


@dataclass(frozen=True)
class SmoothAnalysis:
    """Prefix gcds, c values and smoothness certificates of a sequence.

    `certificates[i-1]` holds non-negative coefficients of g_0..g_{i-1} summing
    to c_i * g_i. Certificates are only kept when every position verifies;
    otherwise `first_failure` names the first index i where c_i * g_i is not in
    the prefix semigroup.
    """
    sequence: tuple[int, ...]
    d_values: tuple[int, ...]
    c_values: tuple[int, ...]
    is_smooth: bool
    certificates: tuple[tuple[int, ...], ...] = ()
    first_failure: Optional[int] = None

    c0 = 1

    @property
    def k(self) -> int:
        return len(self.sequence) - 1

    @property
    def gcd(self) -> int:
        return self.d_values[-1]

    @property
    def is_free(self) -> bool:
        return self.is_smooth and self.gcd == 1

    def c(self, i: int) -> int:
        """c_i with the convention c_0 = 1."""
        return self.c0 if i == 0 else self.c_values[i - 1]


@dataclass(frozen=True)
class SuitablePair:
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class DigitRepresentation:
    """n = sum(digits[i] * sequence[i]) with bounded digits except at `lead_index`."""
    n: int
    digits: tuple[int, ...]
    sequence: tuple[int, ...]
    lead_index: int = 0

    def reconstruct(self) -> int:
        return sum(d * g for d, g in zip(self.digits, self.sequence))

    @property
    def lead_digit(self) -> int:
        return self.digits[self.lead_index]


class Membership(Enum):
    NOT_IN_SEMIGROUP = "not_in_semigroup"
    IN_SEMIGROUP = "in_semigroup"
    IN_APERY = "in_apery"


@dataclass(frozen=True)
class PowerSequence:
    base: tuple[int, ...]
    exponent: int
    result: tuple[int, ...]


@dataclass
class SylvesterReport:
    """Closed-form and enumerated Sylvester sums of one smooth sequence."""
    sequence: tuple[int, ...]
    c_values: tuple[int, ...]
    genus: int
    frobenius: int
    symmetric: bool
    S: dict[int, int] = field(default_factory=dict)
    T: dict[int, int] = field(default_factory=dict)
    S_oracle: dict[int, int] = field(default_factory=dict)
    T_oracle: dict[int, int] = field(default_factory=dict)
    J: int = 0
    I_G: tuple[int, ...] = ()
    agreement: dict[str, bool] = field(default_factory=dict)
    meta: dict[str, Any] = field(default_factory=dict)

    @property
    def all_agree(self) -> bool:
        return all(self.agreement.values())
