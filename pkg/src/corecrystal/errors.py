"""Exception types shared by every module.

All domain errors derive from ``DomainError`` (itself a ``ValueError``), so the
CLI can map them to exit status 1 with a one-line diagnostic.
"""


class DomainError(ValueError):
    """Input is well-typed but outside the domain of the operation."""


class BoxOutsideDiagram(DomainError):
    pass


class SizeMismatch(DomainError):
    pass


class NotACore(DomainError):
    pass


class ModulusTooSmall(DomainError):
    pass


class NotAnEllPartition(DomainError):
    pass


class NotAJMPartition(DomainError):
    pass


class InvalidDecomposition(DomainError):
    pass


class NonzeroSum(DomainError):
    pass


class SizeLimitExceeded(DomainError):
    pass


class CountOverflow(DomainError, OverflowError):
    pass


def require_modulus(ell, minimum=2):
    if ell < minimum:
        raise ModulusTooSmall(f"l must be at least {minimum}, got {ell}")
