"""Exception types shared across the package."""


class UnsupportedCaseError(ValueError):
    """The inputs are valid but no closed form is available for them."""


class DataInvariantError(ValueError):
    """Input data violates a structural invariant (normalization, symmetry, ...)."""
