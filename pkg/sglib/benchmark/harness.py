"""Randomized verification harness and closed-form timing."""

import json
import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from pathlib import Path
from typing import Any, Optional, Union

from ..core import PropertyCheck
from ..errors import SglibError
from ..registry import CheckRegistry
from ..schemas import SuitablePair
from ..semigroup import DEFAULT_ENUMERATION_CAP, make_semigroup
from ..smooth import analyze_sequence, compound_from_pair
from ..sylvester import (
    CLOSED_FORM_POWERS,
    alternating_closed,
    power_genus,
    sums_by_enumeration,
    sylvester_closed,
)

logger = logging.getLogger(__name__)

# G = (99856, 1580, 15), g_0 = 316**2, F = 402569
DEFAULT_BENCH_PAIR = SuitablePair(a=(316, 316), b=(5, 3))


class VerifyHarness:
    """
    Runs registered property checks on seeded random instances.

    Instance i of check `name` draws from ``random.Random(f"{seed}:{name}:{i}")``,
    so results do not depend on the number of workers or on scheduling.

    Args:
        count: instances per check
        seed: base seed
        workers: thread count; 1 runs inline
        checks: check names to run (default: every registered check)
    """

    def __init__(
        self,
        count: int = 20,
        seed: int = 0,
        workers: int = 1,
        checks: Optional[list[str]] = None,
    ):
        if count < 0:
            raise ValueError("count must be >= 0")
        if workers < 1:
            raise ValueError("workers must be >= 1")
        self.count = count
        self.seed = seed
        self.workers = workers
        self.check_names = sorted(checks) if checks else sorted(CheckRegistry.list())

    def _run_one(self, check: PropertyCheck, index: int) -> dict[str, Any]:
        rng = random.Random(f"{self.seed}:{check.meta.name}:{index}")
        try:
            instance = check.sample(rng)
            result = check.apply(instance)
            return {"index": index, "success": result.success, "payload": result.payload}
        except (SglibError, ArithmeticError) as e:
            logger.error(f"{check.meta.name}[{index}] raised {type(e).__name__}: {e}")
            return {"index": index, "success": False, "error": f"{type(e).__name__}: {e}"}

    def run_check(self, name: str) -> dict[str, Any]:
        check = CheckRegistry.get(name)()
        start = time.time()
        if self.workers == 1:
            outcomes = [self._run_one(check, i) for i in range(self.count)]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                futures = [pool.submit(self._run_one, check, i) for i in range(self.count)]
                outcomes = [f.result() for f in futures]
        passed = sum(1 for o in outcomes if o["success"])
        logger.info(f"{name}: {passed}/{len(outcomes)} passed in {time.time() - start:.2f}s")
        return {
            "check": name,
            "category": check.meta.category,
            "passed": passed,
            "failed": len(outcomes) - passed,
            "failures": [o for o in outcomes if not o["success"]],
        }

    def run(self, output_path: Optional[Union[str, Path]] = None) -> dict[str, Any]:
        """Run every selected check; optionally write the summary as JSON."""
        start = time.time()
        results = [self.run_check(name) for name in self.check_names]
        summary = {
            "timestamp": datetime.now().isoformat(),
            "seed": self.seed,
            "count": self.count,
            "workers": self.workers,
            "runtime_seconds": time.time() - start,
            "passed": sum(r["passed"] for r in results),
            "failed": sum(r["failed"] for r in results),
            "checks": results,
        }
        if output_path:
            output_path = Path(output_path)
            output_path.parent.mkdir(parents=True, exist_ok=True)
            with open(output_path, "w", encoding="utf-8") as f:
                json.dump(summary, f, indent=2)
            logger.info(f"verify summary written to {output_path}")
        return summary


def bench_sylvester(
    seq: Optional[tuple[int, ...]] = None,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> dict[str, Any]:
    """Time closed-form S_m and T_m (m <= 2) against gap enumeration.

    Defaults to the compound sequence of `DEFAULT_BENCH_PAIR`.
    """
    if seq is None:
        seq = compound_from_pair(DEFAULT_BENCH_PAIR)
    power_genus.cache_clear()

    start = time.perf_counter()
    analysis = analyze_sequence(seq)
    closed = {}
    for m in CLOSED_FORM_POWERS:
        closed[f"S{m}"] = sylvester_closed(analysis, m)
        closed[f"T{m}"] = alternating_closed(analysis, m)
    closed_seconds = time.perf_counter() - start

    start = time.perf_counter()
    S = make_semigroup(seq, enumeration_cap=enumeration_cap)
    enumerated = {}
    for m in CLOSED_FORM_POWERS:
        enumerated[f"S{m}"], enumerated[f"T{m}"] = sums_by_enumeration(S, m)
    enumeration_seconds = time.perf_counter() - start

    agree = closed == enumerated
    if not agree:
        logger.error(f"bench {seq}: closed forms {closed} vs enumeration {enumerated}")
    return {
        "sequence": list(seq),
        "frobenius": str(S.gaps().frobenius),
        "closed_form": {k: str(v) for k, v in closed.items()},
        "enumeration": {k: str(v) for k, v in enumerated.items()},
        "agree": agree,
        "closed_form_seconds": closed_seconds,
        "enumeration_seconds": enumeration_seconds,
        "speedup": enumeration_seconds / closed_seconds if closed_seconds > 0 else float("inf"),
    }
