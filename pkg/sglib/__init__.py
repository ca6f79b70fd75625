"""
sglib - exact computations on numerical semigroups: gaps, Apéry sets, the
Apéry-set identity, smooth and compound sequences, and power Sylvester sums.
"""

__all__ = [
    "core",
    "registry",
    "schemas",
    "errors",
    "utils",
    "semigroup",
    "identity",
    "smooth",
    "sylvester",
    "serialization",
    "sampling",
    "checks",
]

# package version
__version__ = "0.1.0"
__license__ = "MIT"

# Import checks to ensure they are registered
# This triggers the @CheckRegistry.register decorators
from . import checks  # noqa: F401
