"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class InterleaverError(Exception):
    """Base class for every error raised by this package."""


class FieldError(InterleaverError, ValueError):
    pass


class NonPrimitivePolynomial(FieldError):
    pass


class BoundExceeded(FieldError):
    pass


class MixedFields(FieldError):
    pass


class DivisionByZero(InterleaverError, ZeroDivisionError):
    pass


class ConditionViolated(InterleaverError, ValueError):
    """A family or existence condition does not hold for the given parameters."""


class NotAPermutation(ConditionViolated):
    pass


class ExistenceViolated(ConditionViolated):
    pass


class BlockUnrealizable(ConditionViolated):
    pass


class NotABijection(InterleaverError, ValueError):
    pass


class SizeMismatch(InterleaverError, ValueError):
    pass


class PoleEncountered(InterleaverError, ArithmeticError):
    pass


class InconsistentCount(InterleaverError, ArithmeticError):
    pass


class SearchExhausted(InterleaverError, RuntimeError):
    pass


class MissingK(InterleaverError, ValueError):
    pass
