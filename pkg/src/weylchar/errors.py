"""Exception hierarchy for weylchar.

User errors (bad Cartan data, weights outside the required cone or
sublattice) derive from ValueError; internal failures that indicate a bug
rather than bad input derive from RuntimeError so they are never silently
caught by input-validation handlers.
"""


class WeylCharError(Exception):
    """Base class for all weylchar errors."""


class CartanError(WeylCharError, ValueError):
    """Invalid Cartan data: bad shape, failed symmetrization, not finite type."""


class NotDominantError(WeylCharError, ValueError):
    """A dominant weight was required but a coordinate is negative."""


class SublatticeError(WeylCharError, ValueError):
    """Weight outside X*, or ell incompatible with the Langlands-mode restriction."""


class NotWInvariantError(WeylCharError, ValueError):
    """A Weyl-invariant weight function was required."""


class ClosedFormUnavailableError(WeylCharError, ValueError):
    """The orbit-sum closed form needs a multiplicity-free single-orbit shift
    character; use the general branching routes instead."""


class TheoremViolationError(WeylCharError, RuntimeError):
    """A proved positivity/agreement statement failed: implementation bug signal."""


class InternalConsistencyError(WeylCharError, RuntimeError):
    """Two internal computations of the same quantity disagree."""
