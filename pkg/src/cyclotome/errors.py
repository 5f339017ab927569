"""Exception hierarchy.

Parameter problems derive from ``ParameterError`` (the CLI maps them to exit
code 2); arithmetic self-checks that should never fire derive from
``InternalError`` (exit code 4).
"""


class CyclotomeError(Exception):
    pass


class ParameterError(CyclotomeError, ValueError):
    pass


class InternalError(CyclotomeError, ArithmeticError):
    pass


class NotPrime(ParameterError):
    pass


class BadDegree(ParameterError):
    pass


class GcdViolation(ParameterError):
    pass


class NotPrimitive(ParameterError):
    pass


class TableTooLarge(ParameterError):
    pass


class ZeroElement(ParameterError):
    pass


class ZeroV(ParameterError):
    pass


class WrongParity(ParameterError):
    pass


class TooLarge(ParameterError):
    pass


class DegenerateCosets(ParameterError):
    pass


class InternalInconsistency(InternalError):
    pass


class NonIntegerSum(InternalError):
    pass


class NonDivisibleValue(InternalError):
    pass
