"""Exception hierarchy for sglib.

``InputError`` subclasses describe bad user input and also derive from
``ValueError``. ``InternalError`` subclasses signal that an identity the
library relies on did not hold; they derive from ``AssertionError`` so that
they are never mistaken for recoverable input problems.
"""

from typing import Any, Optional


class SglibError(Exception):
    """Base class for every error raised by sglib."""


class InputError(SglibError, ValueError):
    """The caller supplied an invalid argument."""


class InternalError(SglibError, AssertionError):
    """An exact identity failed; this is an implementation bug."""


# --- semigroup construction -------------------------------------------------

class EmptyGenerators(InputError):
    def __init__(self) -> None:
        super().__init__("generator list is empty")


class ZeroGenerator(InputError):
    def __init__(self, value: int) -> None:
        self.value = value
        super().__init__(f"generators must be positive integers, got {value}")


class NonCoprimeGenerators(InputError):
    def __init__(self, gcd: int) -> None:
        self.gcd = gcd
        super().__init__(f"generators are not coprime (gcd={gcd})")


class ModulusNotInSemigroup(InputError):
    def __init__(self, t: int) -> None:
        self.t = t
        super().__init__(f"modulus {t} is not an element of the semigroup")


class ZeroModulus(InputError):
    def __init__(self) -> None:
        super().__init__("modulus must be a nonzero element of the semigroup")


class FullSemigroup(InputError):
    """Raised where a positive Frobenius number is required but S is all of N0."""

    frobenius = -1

    def __init__(self) -> None:
        super().__init__("semigroup is N0; it has no gaps (frobenius -1)")


class EnumerationCapExceeded(InputError):
    def __init__(self, bound: int, cap: int) -> None:
        self.bound = bound
        self.cap = cap
        super().__init__(
            f"gap enumeration needs a window beyond {bound}, above the cap {cap}"
        )


# --- sequences ----------------------------------------------------------------

class EmptySequence(InputError):
    def __init__(self) -> None:
        super().__init__("sequence is empty")


class ZeroEntry(InputError):
    def __init__(self, index: int, value: int) -> None:
        self.index = index
        self.value = value
        super().__init__(f"sequence entry {index} must be positive, got {value}")


class UnsuitablePair(InputError):
    def __init__(self, i: int, j: int, gcd: int) -> None:
        self.i = i
        self.j = j
        self.gcd = gcd
        super().__init__(f"pair is not suitable: gcd(a_{i}, b_{j}) = {gcd}")


class NotCompoundInput(InputError):
    def __init__(self, sequence: Any) -> None:
        self.sequence = tuple(sequence)
        super().__init__(f"sequence {self.sequence} is not compound")


class SequenceTooLongForSetSearch(InputError):
    def __init__(self, length: int, limit: int) -> None:
        self.length = length
        self.limit = limit
        super().__init__(
            f"ordering search is limited to {limit} elements, got {length}"
        )


class NotSmooth(InputError):
    def __init__(self, sequence: Any, index: Optional[int] = None) -> None:
        self.sequence = tuple(sequence)
        self.index = index
        where = f" (fails at position {index})" if index is not None else ""
        super().__init__(f"sequence {self.sequence} is not smooth{where}")


class NotCoprime(InputError):
    def __init__(self, gcd: int) -> None:
        self.gcd = gcd
        super().__init__(f"entries are not coprime (gcd={gcd})")


class IndexOutOfRange(InputError):
    def __init__(self, index: int, upper: int) -> None:
        self.index = index
        self.upper = upper
        super().__init__(f"index {index} outside 0..{upper}")


class EvenSecondArgument(InputError):
    def __init__(self, b: int) -> None:
        self.b = b
        super().__init__(f"b must be odd, got {b}; swap the arguments")


class UnsupportedPower(InputError):
    def __init__(self, m: int, supported: str = "0, 1, 2") -> None:
        self.m = m
        super().__init__(f"no closed form for m={m}; supported: {supported}")


class InvalidTestFunction(InputError):
    pass


# --- internal ------------------------------------------------------------------

class NonIntegralResult(InternalError):
    def __init__(self, value: Any, what: str = "result") -> None:
        self.value = value
        super().__init__(f"{what} should be an integer, got {value}")


class IdentityViolation(InternalError):
    pass


class RelationViolation(InternalError):
    pass


class OracleMismatch(InternalError):
    def __init__(self, report: Any, keys: Any) -> None:
        self.report = report
        self.keys = list(keys)
        super().__init__(f"closed form disagrees with enumeration for {self.keys}")


# --- check registry ------------------------------------------------------------

class CheckRegistrationError(SglibError, TypeError):
    """A property check class cannot be registered."""

    def __init__(self, klass: type, reason: str) -> None:
        self.klass = klass
        super().__init__(f"cannot register {klass.__name__}: {reason}")
