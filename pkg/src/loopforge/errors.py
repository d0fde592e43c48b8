"""Exception hierarchy shared by every loopforge module."""


class LoopforgeError(Exception):
    """Base class for all errors raised by loopforge."""


class BadDimensions(LoopforgeError, ValueError):
    pass


class NotLatinSquare(LoopforgeError, ValueError):
    pass


class NoIdentity(LoopforgeError, ValueError):
    pass


class NotAssociative(LoopforgeError, ValueError):
    pass


class NotUniquely2Divisible(LoopforgeError, ValueError):
    pass


class OrderCapExceeded(LoopforgeError):
    """A computation was refused because its input exceeds a configured cap."""


class EnumerationTooLarge(OrderCapExceeded):
    pass


class ParseError(LoopforgeError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DegreeMismatch(LoopforgeError, ValueError):
    pass


class NotSolvable(LoopforgeError):
    pass


class NotNilpotent(LoopforgeError):
    pass


class NotNormal(LoopforgeError, ValueError):
    pass


class NotASubloop(LoopforgeError, ValueError):
    pass


class IllDefined(LoopforgeError):
    pass


class InternalInconsistency(LoopforgeError, AssertionError):
    """Two independent computations of the same object disagreed."""


class NotAutomorphism(LoopforgeError, ValueError):
    pass


class NotInvolutory(LoopforgeError, ValueError):
    pass


class NotTwisted(LoopforgeError, ValueError):
    pass


class ConstructionFailed(LoopforgeError):
    pass


class UnknownDataset(LoopforgeError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown dataset"
