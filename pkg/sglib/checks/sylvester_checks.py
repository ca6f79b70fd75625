import math
import random
from typing import Any

from ..core import CheckMeta, CheckResult, PropertyCheck
from ..errors import OracleMismatch
from ..registry import CheckRegistry
from ..sampling import CompoundInstance, random_compound
from ..semigroup import make_semigroup
from ..serialization import to_json_dict
from ..sylvester import (
    CLOSED_FORM_POWERS,
    invariant_report,
    sums_by_enumeration,
    wang_wang_explicit,
    wang_wang_T,
)


@CheckRegistry.register
class ClosedFormOracle(PropertyCheck):
    meta = CheckMeta(
        name="closed_form_oracle",
        category="sylvester",
        description="closed-form S_m and T_m (m <= 2) equal gap enumeration",
    )

    def __init__(self, frobenius_limit: int = 10 ** 4):
        super().__init__(self.meta)
        self.frobenius_limit = frobenius_limit

    def sample(self, rng: random.Random) -> CompoundInstance:
        return random_compound(rng, frobenius_limit=self.frobenius_limit)

    def apply(self, instance: Any) -> CheckResult:
        seq = instance.sequence if isinstance(instance, CompoundInstance) else tuple(instance)
        try:
            report = invariant_report(seq)
        except OracleMismatch as e:
            return CheckResult(
                success=False,
                payload={**to_json_dict(e.report), "failures": e.keys},
            )
        return CheckResult(success=True, payload=to_json_dict(report))


@CheckRegistry.register
class WangWangCheck(PropertyCheck):
    """Two-generator recurrence against enumeration, explicit forms and (a, b) symmetry."""

    meta = CheckMeta(
        name="wang_wang",
        category="sylvester",
        description="alternating sums of <a, b> by recurrence in m",
    )

    def __init__(self, max_value: int = 40, max_power: int = 6):
        super().__init__(self.meta)
        self.max_value = max_value
        self.max_power = max_power

    def sample(self, rng: random.Random) -> tuple[int, int]:
        while True:
            a = rng.randint(1, self.max_value)
            b = rng.randint(1, self.max_value)
            if math.gcd(a, b) != 1:
                continue
            if b % 2 == 0:
                a, b = b, a
            return a, b

    def apply(self, instance: Any) -> CheckResult:
        a, b = instance
        S = make_semigroup((a, b))
        problems = []
        for m in range(self.max_power + 1):
            value = wang_wang_T(a, b, m)
            if value != sums_by_enumeration(S, m)[1]:
                problems.append(f"m={m}: enumeration")
            if m in CLOSED_FORM_POWERS and value != wang_wang_explicit(a, b, m):
                problems.append(f"m={m}: explicit form")
            if a % 2 and value != wang_wang_T(b, a, m):
                problems.append(f"m={m}: symmetry")
        return CheckResult(success=not problems, payload={"a": a, "b": b, "failures": problems})
