"""Exception hierarchy of um2witt.

Library code raises these; only the command line entry point turns them into exit
statuses (see ``exit_status``).
"""

from typing import Optional


class Um2WittError(Exception):
    """Base class for all um2witt errors."""

    exit_status = 1


class InputError(Um2WittError, ValueError):
    """Malformed or inconsistent input."""

    exit_status = 2


class PolynomialSyntaxError(InputError):
    """Syntax error in a polynomial expression."""

    def __init__(self, message: str, text: str, position: int):
        """Initialize syntax error.

        Args:
            message (str):  Description of the problem
            text (str):     The text being parsed
            position (int): Zero-based offset of the offending character
        """
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: '{text}'")


class UndeclaredVariableError(InputError):
    """Identifier in an expression that is not a ring variable."""

    def __init__(self, name: str, position: Optional[int] = None):
        """Initialize undeclared variable error.

        Args:
            name (str):      The undeclared identifier
            position (int):  (Optional) offset of the identifier in the parsed text
        """
        self.name = name
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"Undeclared variable '{name}'{where}")


class VariableMismatchError(InputError):
    """Polynomials over different variable lists were combined."""


class DimensionMismatchError(InputError):
    """Arity, size or dimension does not match."""


class IndexOutOfRangeError(InputError):
    """Index of an elementary move outside the row."""


class ConfigurationError(InputError):
    """Invalid configuration value."""


class NotAlternatingError(InputError):
    """Matrix is not alternating."""


class OddSizeError(InputError):
    """Pfaffian requested for an odd-sized matrix."""


class RingMismatchError(InputError):
    """Elements or matrices from different rings were combined."""


class TrivialRingError(InputError):
    """Operation refused over the zero ring."""


class NotAUnitError(InputError):
    """A unit was required."""


class TrackingAbsentError(InputError):
    """Cofactors requested from a basis computed without tracking."""


class SymmetricModeError(InputError):
    """Symmetric alpha requested for a row whose certificate is not its entries."""


class BudgetExceededError(Um2WittError, RuntimeError):
    """Reduction step budget exhausted; the answer is unknown."""

    exit_status = 3

    def __init__(self, budget: int, context: str = "Groebner basis computation"):
        """Initialize budget error.

        Args:
            budget (int):  The exhausted number of reduction steps
            context (str): What was being computed
        """
        self.budget = budget
        super().__init__(f"{context} exceeded the budget of {budget} reduction steps")


class VerificationError(Um2WittError, AssertionError):
    """An exact identity or certificate failed to verify."""

    exit_status = 1


class BadCertificateError(VerificationError):
    """Supplied certificate does not satisfy sum(a_i * b_i) = 1."""


class IdentityFailedError(VerificationError):
    """A polynomial identity that must hold did not reduce to zero."""


class NotUnimodularError(VerificationError):
    """Membership of 1 in the ideal generated by the row was refuted."""


class MissingRelationError(NotUnimodularError):
    """Ring lacks the relation an operation depends on."""


class RealizationError(Um2WittError, RuntimeError):
    """Failure in the numerical realization."""

    exit_status = 1


class IrregularValueError(RealizationError):
    """Value is not a regular value (or not attained)."""


class ChartEscapeError(RealizationError):
    """Curve comes too close to the projection pole."""


class OpenCurveError(RealizationError):
    """Curve tracing did not close within its step budget."""


class ResidualTooLargeError(RealizationError):
    """Linking integral too far from an integer."""


def exit_status(error: BaseException) -> int:
    """Exit status for an exception raised by the library."""
    if isinstance(error, Um2WittError):
        return error.exit_status
    if isinstance(error, (FileNotFoundError, KeyError, ValueError)):
        return 2
    return 1
