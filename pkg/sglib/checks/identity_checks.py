"""Checks of the Apéry-set identity, the set equalities behind it, and the Hilbert series."""

import random
from typing import Any

from ..core import CheckMeta, CheckResult, PropertyCheck
from ..identity import (
    hilbert_agrees,
    identity_rhs_without_zero,
    identity_sides,
    standard_family,
    two_generator_rhs,
)
from ..registry import CheckRegistry
from ..sampling import random_generators
from ..semigroup import NumericalSemigroup, make_semigroup

MAX_MODULUS = 60


def valid_moduli(S: NumericalSemigroup, upper: int) -> list[int]:
    """Nonzero elements of S up to `upper`."""
    return [t for t in range(1, upper + 1) if S.contains(t)]


class _SemigroupCheck(PropertyCheck):
    """Shared sampling: up to four generators no larger than 30."""

    def __init__(self, max_generators: int = 4, max_value: int = 30):
        super().__init__(self.meta)
        self.max_generators = max_generators
        self.max_value = max_value

    def sample(self, rng: random.Random) -> tuple[int, ...]:
        return random_generators(rng, self.max_generators, self.max_value)


@CheckRegistry.register
class TuenterAperyIdentity(_SemigroupCheck):
    """Both sides of the identity for every valid t <= 60 and the standard function family.

    Also compares the variant without n = 0 and, for two generators, the
    closed right side over Ap(S; a) = {n b}.
    """

    meta = CheckMeta(
        name="tuenter_apery_identity",
        category="identity",
        description="sum over gaps of f(n+t)-f(n) equals the Apery-set right side",
    )

    def apply(self, instance: Any) -> CheckResult:
        S = make_semigroup(instance)
        family = standard_family()
        failures = []
        moduli = valid_moduli(S, MAX_MODULUS)
        pair = S.generators if len(S.generators) == 2 else None
        for t in moduli:
            for f in family:
                report = identity_sides(S, t, f)
                if not report.holds:
                    failures.append({"t": t, "f": f.describe(), "form": "rhs"})
                elif identity_rhs_without_zero(S, t, f) != report.rhs:
                    failures.append({"t": t, "f": f.describe(), "form": "without_zero"})
                elif pair is not None and t in pair:
                    other = pair[1] if t == pair[0] else pair[0]
                    if two_generator_rhs(t, other, f) != report.rhs:
                        failures.append({"t": t, "f": f.describe(), "form": "two_generator"})
        return CheckResult(
            success=not failures,
            payload={
                "generators": list(S.generators),
                "moduli": len(moduli),
                "functions": len(family),
                "failures": failures,
            },
        )


@CheckRegistry.register
class AperySetEqualities(_SemigroupCheck):
    meta = CheckMeta(
        name="apery_set_equalities",
        category="identity",
        description="(NR+t)\\NR = Ap\\Ap_t and NR\\(NR+t) = [0,t)\\Ap_t",
    )

    def apply(self, instance: Any) -> CheckResult:
        S = make_semigroup(instance)
        upper = S.gaps().frobenius + S.multiplicity
        failures = [t for t in valid_moduli(S, upper) if not S.set_equalities(t).holds]
        return CheckResult(
            success=not failures,
            payload={"generators": list(S.generators), "upper": upper, "failures": failures},
        )


@CheckRegistry.register
class HilbertSeriesCheck(_SemigroupCheck):
    meta = CheckMeta(
        name="hilbert_series",
        category="identity",
        description="Apery numerator over 1-x^t expands to the indicator series of S",
    )

    def apply(self, instance: Any) -> CheckResult:
        S = make_semigroup(instance)
        failures = [t for t in valid_moduli(S, MAX_MODULUS) if not hilbert_agrees(S, t)]
        return CheckResult(
            success=not failures,
            payload={"generators": list(S.generators), "failures": failures},
        )
