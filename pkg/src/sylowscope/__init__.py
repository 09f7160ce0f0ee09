"""Permutation-group toolkit for Sylow-conjugacy and Gassmann-equivalence checks."""

from .perm import Permutation
from .group import PermutationGroup
from .errors import (CapExceededError, InvariantViolation, NoApplicableModeError,
                     NotASubgroupError, NotNormalError, SylowscopeError)

__version__ = "0.1.0"

__all__ = [
    "Permutation", "PermutationGroup", "SylowscopeError", "CapExceededError",
    "InvariantViolation", "NoApplicableModeError", "NotASubgroupError", "NotNormalError",
]
