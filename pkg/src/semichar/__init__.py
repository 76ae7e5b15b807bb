"""Exact character theory of finite inverse semigroups and related classes."""

from .cyclotomic import Cyclotomic, E
from .errors import (
    BudgetError,
    ClosureOverflow,
    InputError,
    PreconditionError,
    SemicharError,
    VerificationError,
)
from .partial_perm import PartialPerm
from .semigroup import Semigroup, closure, d_classes, from_partial_perms, from_table

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic", "E", "PartialPerm", "Semigroup", "closure", "d_classes",
    "from_partial_perms", "from_table", "SemicharError", "InputError", "BudgetError",
    "ClosureOverflow", "PreconditionError", "VerificationError",
]
