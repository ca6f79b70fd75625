import random
from typing import Any

from ..core import CheckMeta, CheckResult, PropertyCheck
from ..identity import genus_from_identity
from ..registry import CheckRegistry
from ..sampling import random_generators
from ..semigroup import is_symmetric_direct, make_semigroup
from .identity_checks import MAX_MODULUS, valid_moduli


@CheckRegistry.register
class AperyInvariants(PropertyCheck):
    """F and g from the Apéry sets at small t agree with enumeration; F <= 2g - 1."""

    meta = CheckMeta(
        name="apery_invariants",
        category="semigroup",
        description="t-independence of Frobenius number and genus, symmetry criterion",
    )

    def __init__(self, max_generators: int = 4, max_value: int = 30):
        super().__init__(self.meta)
        self.max_generators = max_generators
        self.max_value = max_value

    def sample(self, rng: random.Random) -> tuple[int, ...]:
        return random_generators(rng, self.max_generators, self.max_value)

    def apply(self, instance: Any) -> CheckResult:
        S = make_semigroup(instance)
        gap_set = S.gaps()
        problems = []
        for t in valid_moduli(S, min(gap_set.frobenius + S.multiplicity, MAX_MODULUS)):
            if S.frobenius_via_apery(t) != gap_set.frobenius:
                problems.append(f"frobenius at t={t}")
            if S.genus_via_apery(t) != gap_set.genus:
                problems.append(f"genus at t={t}")
            if genus_from_identity(S, t) != gap_set.genus:
                problems.append(f"identity genus at t={t}")
        if gap_set.frobenius > 2 * gap_set.genus - 1:
            problems.append("frobenius above 2g-1")
        if S.is_symmetric() != is_symmetric_direct(S):
            problems.append("symmetry criteria disagree")
        return CheckResult(
            success=not problems,
            payload={
                "generators": list(S.generators),
                "frobenius": gap_set.frobenius,
                "genus": gap_set.genus,
                "symmetric": S.is_symmetric(),
                "failures": problems,
            },
        )
