import random
from typing import Any

from ..core import CheckMeta, CheckResult, PropertyCheck
from ..identity import TestFunction, identity_sides
from ..registry import CheckRegistry
from ..sampling import CompoundInstance, random_compound
from ..schemas import Membership
from ..semigroup import make_semigroup
from ..smooth import (
    analyze_sequence,
    classify,
    compound_identity_rhs,
    compound_representation,
    explicit_apery,
    frobenius_closed,
    permute_rho,
    unique_representation,
)


@CheckRegistry.register
class UniqueRepresentation(PropertyCheck):
    """Digit expansions on a smooth sequence are unique and decide membership.

    The window is [-F - 2 g_0, F + 2 g_0].
    """

    meta = CheckMeta(
        name="unique_representation",
        category="smooth",
        description="bijective digit representation and membership by the leading digit",
    )

    def __init__(self, max_g0: int = 60):
        super().__init__(self.meta)
        self.max_g0 = max_g0

    def sample(self, rng: random.Random) -> CompoundInstance:
        return random_compound(rng, max_g0=self.max_g0)

    def apply(self, instance: Any) -> CheckResult:
        seq = instance.sequence if isinstance(instance, CompoundInstance) else tuple(instance)
        analysis = analyze_sequence(seq)
        S = make_semigroup(seq)
        S.gaps()
        g0 = seq[0]
        F = frobenius_closed(analysis)
        apery = S.apery_set(g0)
        seen: dict[tuple[int, ...], int] = {}
        problems = []
        for n in range(-F - 2 * g0, F + 2 * g0 + 1):
            rep = unique_representation(analysis, n)
            if rep.reconstruct() != n:
                problems.append(f"{n}: digits do not reconstruct")
            if any(not 0 <= d < analysis.c(i) for i, d in enumerate(rep.digits) if i):
                problems.append(f"{n}: digit out of range")
            if rep.digits in seen:
                problems.append(f"{n}: digits shared with {seen[rep.digits]}")
            seen[rep.digits] = n
            kind = classify(analysis, n)
            if (kind is not Membership.NOT_IN_SEMIGROUP) != S.contains(n):
                problems.append(f"{n}: membership")
            if (kind is Membership.IN_APERY) != (n in apery):
                problems.append(f"{n}: Apery membership")
        return CheckResult(
            success=not problems,
            payload={"sequence": list(seq), "window": len(seen), "failures": problems[:20]},
        )


@CheckRegistry.register
class RhoPermutation(PropertyCheck):
    """Every rho_j of a compound sequence is smooth and yields Ap(S; g_j) explicitly."""

    meta = CheckMeta(
        name="rho_permutation",
        category="smooth",
        description="rho_j images are smooth with the stated c values and Apery sets",
    )

    def __init__(self, frobenius_limit: int = 2000):
        super().__init__(self.meta)
        self.frobenius_limit = frobenius_limit

    def sample(self, rng: random.Random) -> CompoundInstance:
        return random_compound(rng, frobenius_limit=self.frobenius_limit, permute=False)

    def apply(self, instance: Any) -> CheckResult:
        pair, seq = instance.pair, instance.compound
        S = make_semigroup(seq)
        S.gaps()
        family = [TestFunction.monomial(m) for m in range(3)]
        family.append(TestFunction.signed_monomial(1))
        problems = []
        for j in range(pair.k + 1):
            permuted, _ = permute_rho(seq, j)
            analysis = analyze_sequence(permuted)
            if explicit_apery(analysis).elements != S.apery_set(seq[j]).elements:
                problems.append(f"j={j}: explicit Apery set")
            for f in family:
                if compound_identity_rhs(pair, j, f) != identity_sides(S, seq[j], f).rhs:
                    problems.append(f"j={j}: identity with {f.describe()}")
            stop = instance.frobenius + seq[j] + 1
            step = max(1, (stop + seq[j]) // 50)
            for n in range(-seq[j], stop, step):
                rep = compound_representation(pair, j, n)
                if rep.reconstruct() != n or (rep.lead_digit >= 0) != S.contains(n):
                    problems.append(f"j={j}: representation of {n}")
                    break
        return CheckResult(
            success=not problems,
            payload={"a": list(pair.a), "b": list(pair.b), "sequence": list(seq), "failures": problems},
        )
