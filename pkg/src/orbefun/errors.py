"""Exceptions and warning categories shared across the package."""


class OrbefunError(Exception):
    """Base class for every error raised by this package."""


class InputSyntaxError(OrbefunError):
    """Input text does not conform to the accepted grammar.

    `position` is a 0-based character offset into the offending text.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(OrbefunError):
    """Structurally well-formed input violating a mathematical precondition."""


class NotInvertibleError(DomainError):
    """The monomial/variable data cannot define an invertible polynomial."""


class NotDecomposableError(DomainError):
    """The exponent matrix does not split into chain and loop atoms."""


class MembershipError(DomainError):
    """A group element lies outside the group it was asserted to belong to."""


class ModeError(DomainError):
    """An operation was applied outside its mode assumption (G in SL, or G containing
    the grading operator); detected through a non-integral sign exponent."""


class VerificationError(OrbefunError):
    """A cross-check that must hold by theorem failed (engine mismatch,
    duality failure, corpus expectation mismatch)."""


class CoefficientWarning(UserWarning):
    """Numeric coefficients are accepted, reduced to presence and otherwise ignored."""
