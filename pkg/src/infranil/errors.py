"""Exception hierarchy shared across the package."""


class InfranilError(Exception):
    """Base class for all errors raised by this package."""


class CatalogError(InfranilError):
    """Unknown catalog id or malformed catalog data."""


class ConstraintError(InfranilError):
    """A parameter violates a documented constraint (parity, congruence, ...)."""


class InvalidCandidateError(InfranilError):
    """An affine pair that does not induce a self-map was used where a valid one is required."""


class ReconstructionError(InfranilError):
    """Linear-recurrence or product reconstruction failed (bad degree bound, non-integer exponent, ...)."""


class CorpusError(InfranilError):
    """The family corpus file is inconsistent with the validator or cannot be parsed."""


class RouteMismatchError(InfranilError):
    """The direct and structural zeta computations disagree."""
