"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ContractViolation(ValueError):
    """An input breaks a documented precondition (e.g. a non-symmetric matrix)."""
