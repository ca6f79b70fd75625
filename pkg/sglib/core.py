import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Optional


@dataclass
class CheckMeta:
    """Metadata describing a property check."""
    name: str
    category: str
    description: str
    tags: Optional[Dict[str, Any]] = None


@dataclass
class CheckResult:
    """Uniform wrapper for check outcomes."""
    success: bool
    payload: Any
    meta: Optional[Dict[str, Any]] = None


class PropertyCheck(ABC):
    """Abstract base class for randomized property checks.

    Concrete checks draw an instance with `sample(rng)` and evaluate it with
    `apply(instance)`. Only `apply` is abstract; checks that are always fed
    explicit instances need not override `sample`.
    """

    meta: CheckMeta

    def __init__(self, meta: CheckMeta):
        self.meta = meta

    def sample(self, rng: random.Random) -> Any:
        """Draw one instance for this check."""
        raise NotImplementedError(f"{self.meta.name} does not sample instances")

    @abstractmethod
    def apply(self, instance: Any) -> CheckResult:
        """Evaluate the property on one instance."""
        pass
