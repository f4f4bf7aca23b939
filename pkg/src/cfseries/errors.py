"""Exception hierarchy shared by all modules."""


class CFError(Exception):
    """Base class for every error raised by this package."""


class ConfigurationError(CFError, ValueError):
    """Inconsistent setup: mismatched series, unknown preset, missing parameter."""


class EnumerationGuardError(ConfigurationError):
    pass


class DomainError(CFError, ArithmeticError):
    """A numeric operation left its domain (zero divisor, pole, wrong q-region).

    ``index`` names the sequence position at which the failure happened, when
    there is one.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DegenerateDenominatorError(DomainError):
    pass


class PoleError(DomainError):
    pass


class ExprSyntaxError(CFError, ValueError):
    """Malformed expression text.

    Attributes
    ----------
    offset : int
        Byte offset into the source text.
    expected : frozenset of str
        Token kinds that would have been accepted at ``offset``.
    """

    def __init__(self, message, offset, expected=frozenset()):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.expected = frozenset(expected)


class UnknownCharacterError(ExprSyntaxError):
    pass


class UnboundIdentifierError(CFError, LookupError):
    def __init__(self, name):
        super().__init__(f"unbound identifier {name!r}")
        self.name = name


class CoefficientError(CFError):
    """Evaluation of a coefficient rule failed at index ``index``."""

    def __init__(self, index, cause):
        super().__init__(f"coefficient evaluation failed at m={index}: {cause}")
        self.index = index
        self.cause = cause


class NonConvergenceError(CFError, ArithmeticError):
    """Iteration bound exhausted; carries the last iterate."""

    def __init__(self, value, iterations):
        super().__init__(f"no convergence after {iterations} iterations")
        self.value = value
        self.iterations = iterations
