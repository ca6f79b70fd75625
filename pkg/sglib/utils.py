from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Union

from .errors import InputError, NonIntegralResult

Rational = Union[int, Fraction]


def exact_int(value: Rational, what: str = "result") -> int:
    """Return `value` as an int, raising NonIntegralResult if it is not integral."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return value
    frac = Fraction(value)
    if frac.denominator != 1:
        raise NonIntegralResult(frac, what)
    return frac.numerator


def check_int_sequence(values: Iterable[object], what: str = "value") -> tuple[int, ...]:
    """Reject non-integers (bools and floats included) with TypeError."""
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"{what} must be integers, got {v!r}")
        out.append(v)
    return tuple(out)


def parse_int_list(text: str, what: str = "list") -> tuple[int, ...]:
    """Parse a comma-separated list of decimal integers such as ``"4,6,9"``."""
    parts = [p.strip() for p in text.split(",")]
    if not text.strip() or any(p == "" for p in parts):
        raise InputError(f"malformed {what}: {text!r}")
    try:
        return tuple(int(p, 10) for p in parts)
    except ValueError as e:
        raise InputError(f"malformed {what}: {text!r}") from e


def format_rational(value: Rational) -> str:
    """Decimal string for an int, ``p/q`` for a proper fraction."""
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def power_sum(values: Sequence[int], m: int, alternating: bool = False) -> int:
    """Sum of n**m (or (-1)**n * n**m) over `values`; 0**0 counts as 1."""
    if alternating:
        return sum(-(n ** m) if n & 1 else n ** m for n in values)
    return sum(n ** m for n in values)
