"""Exception hierarchy. Every error raised by the package derives from ECBoundError."""


class ECBoundError(Exception):
    pass


class NonResidue(ECBoundError, ValueError):
    pass


class NotAUnit(ECBoundError, ValueError):
    pass


class PrecisionExhausted(ECBoundError, RuntimeError):
    pass


class SingularCurve(ECBoundError, ValueError):
    pass


class NonIntegralResult(ECBoundError, ValueError):
    pass


class NotMinimal(ECBoundError, ValueError):
    pass


class NotMultiplicative(ECBoundError, ValueError):
    pass


class MissingTrace(ECBoundError, ValueError):
    pass


class BadReduction(ECBoundError, ValueError):
    pass


class EvenPrime(ECBoundError, ValueError):
    pass


class SmallPrime(ECBoundError, ValueError):
    pass


class PreconditionViolated(ECBoundError, ValueError):
    pass


class SamePrime(ECBoundError, ValueError):
    pass


class IncompleteLocalData(ECBoundError, ValueError):
    pass


class ParseError(ECBoundError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
