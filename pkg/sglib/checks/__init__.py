# property checks; importing this package registers them with CheckRegistry
__all__ = [
    "identity_checks",
    "semigroup_checks",
    "smooth_checks",
    "sylvester_checks",
]

from .identity_checks import AperySetEqualities, HilbertSeriesCheck, TuenterAperyIdentity  # noqa: F401
from .semigroup_checks import AperyInvariants  # noqa: F401
from .smooth_checks import RhoPermutation, UniqueRepresentation  # noqa: F401
from .sylvester_checks import ClosedFormOracle, WangWangCheck  # noqa: F401
