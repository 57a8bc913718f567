"""Exception types raised by cycloweight.

Every error is a ValueError so callers that only care about bad input can
catch that; the CLI maps CycloweightError to exit status 2.
"""


class CycloweightError(ValueError):
    """Base class for all cycloweight errors."""


class InputRangeError(CycloweightError):
    """An integer argument is outside the supported range."""


class InvalidArgumentError(CycloweightError):
    """An argument violates an operation's precondition."""


class DivisionByZeroError(CycloweightError, ZeroDivisionError):
    """Inversion of the zero field element."""


class NotInBaseFieldError(CycloweightError):
    """An F_{q^2} element is not fixed by the Frobenius map."""


class RemainderNonzeroError(CycloweightError):
    """Polynomial division that was required to be exact left a remainder."""


class DimensionMismatchError(CycloweightError):
    """A message vector does not have the code's dimension."""


class InvalidLengthError(CycloweightError):
    """gcd(n, q) != 1."""


class OutOfRegimeError(CycloweightError):
    """rad(n) does not divide q - 1, so no closed form applies."""


class CaseMismatchError(CycloweightError):
    """A case-specific routine was called with the other case's parameters."""


class OracleOutOfRangeError(CycloweightError):
    """The coset oracle would need a splitting field above its degree cap."""


class InconsistentParametersError(CycloweightError):
    """Closed-form parameters do not fit together; signals an upstream bug."""


class DegenerateDenominatorError(CycloweightError):
    """A Lambda_u quotient has a zero denominator."""


class CapExceededError(CycloweightError):
    """Brute-force enumeration would visit more codewords than allowed."""


class ParseError(CycloweightError):
    """Polynomial text could not be parsed."""


class ChannelError(CycloweightError):
    """Channel model incompatible with the field size or probability."""
