"""Exception hierarchy shared by every module of the package."""


class PosetRamseyError(Exception):
    """Base class for all errors raised by poset_ramsey."""


class ConstructionError(PosetRamseyError):
    """A poset could not be built from the given expression."""


class ParameterError(PosetRamseyError, ValueError):
    """Arguments violate an operation's precondition."""


class BudgetError(PosetRamseyError):
    """A search would exceed its configured size cap."""


class EncodingError(PosetRamseyError):
    """A restriction cannot be encoded, or an encoding is malformed."""


class NoWitnessError(PosetRamseyError):
    """Two chains are t-close, so no subdivided diamond can be extracted."""


class ParseError(PosetRamseyError, ValueError):
    """Syntax error in a poset expression.

    ``offset`` is the byte offset into the input where parsing failed.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.reason = message


class VerificationError(PosetRamseyError):
    """A certificate failed independent re-validation."""
