"""Exception hierarchy shared by every module."""


class ARLabelError(Exception):
    """Base class for all errors raised by arlabel."""


class InvalidParameter(ARLabelError, ValueError):
    pass


class UnsupportedCopies(InvalidParameter):
    pass


class ParseError(ARLabelError, ValueError):
    def __init__(self, reason, line=None):
        self.reason = reason
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{reason}")


class NonSimpleError(ParseError):
    pass


class LengthMismatch(ARLabelError, ValueError):
    pass


class DegreeTooLarge(ARLabelError):
    """Refused an exponential subset-sum check above the degree cap."""


class PreconditionViolated(ARLabelError, ValueError):
    pass


class Infeasible(ARLabelError):
    pass


class BaseNotAR(ARLabelError, ValueError):
    pass


class NotCubic(ARLabelError, ValueError):
    pass


class NotHamiltonianCycle(ARLabelError, ValueError):
    pass


class NotACycleCover(ARLabelError, ValueError):
    pass


class DegreeTooHigh(ARLabelError, ValueError):
    pass


class ConstructionFailed(ARLabelError):
    """A constructor produced a labeling that did not verify and could not be repaired."""


class BudgetExceeded(ARLabelError):
    """Search ran out of its node budget.

    ``lower`` and ``upper`` bracket the unknown answer when the caller is an
    optimisation (AR-index); both are None for plain feasibility searches.
    """

    def __init__(self, message="node budget exceeded", lower=None, upper=None, nodes=0):
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
        if lower is not None:
            message = f"{message} (answer in [{lower}, {upper}])"
        super().__init__(message)


class TimeBudgetExceeded(BudgetExceeded):
    pass
