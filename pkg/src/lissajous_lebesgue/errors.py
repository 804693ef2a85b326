"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Invalid parameters (non-coprime frequencies, bad parity vector, r > s, ...)."""


class DomainError(ValueError):
    """Evaluation point outside the domain of a function."""


class SingularPointError(ValueError):
    """Evaluation point too close to a removable pole; resample the point."""
