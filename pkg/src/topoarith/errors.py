"""Exception hierarchy shared by every module of the package."""


class TopoArithError(Exception):
    """Base class for all errors raised by topoarith."""


class UndefinedValuationError(TopoArithError, ValueError):
    """The 2-adic valuation of zero was requested."""


class UnderflowError(TopoArithError, ArithmeticError):
    """Natural-number subtraction with a larger subtrahend."""


class EmptyIntervalError(TopoArithError, ValueError):
    """An interval query whose lower end is not strictly below its upper end."""


class CarrierMismatchError(TopoArithError, TypeError):
    """A point was tested against a set living on a different carrier."""


class PreconditionError(TopoArithError, ValueError):
    """An operation was called outside its documented domain."""


class UnsupportedSpecError(TopoArithError, ValueError):
    """A topology descriptor has no structure the requested operation needs."""


class UnsupportedFormatError(TopoArithError, ValueError):
    pass


class BudgetExceededError(TopoArithError, RuntimeError):
    """A bounded search ran out of its step budget."""


class NotationError(TopoArithError, ValueError):
    """Malformed textual notation for a basic open or topology."""
