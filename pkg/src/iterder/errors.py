"""Exception hierarchy."""


class AlgebraError(Exception):
    pass


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class NotInSubfield(AlgebraError, ValueError):
    pass


class OrderMismatch(AlgebraError, ValueError):
    pass


class OrderExceeded(AlgebraError, ValueError):
    pass


class NonUnitConstantTerm(AlgebraError, ZeroDivisionError):
    pass


class BasePointNotOnCurve(AlgebraError, ValueError):
    pass


class NonInvertibleDenominator(AlgebraError, ZeroDivisionError):
    pass


class NotOnCurve(AlgebraError, ValueError):
    pass


class InsufficientData(AlgebraError, ValueError):
    pass


class ChoiceNotInSubfield(AlgebraError, ValueError):
    pass


class MembershipViolation(AlgebraError, ValueError):
    pass


class PreconditionFailed(AlgebraError, ValueError):
    pass


class ParseError(ValueError):
    pass


class DigestMismatch(ValueError):
    pass
