"""Exception types raised by the solvers."""


class GraphError(ValueError):
    """Base class for all errors raised by this package."""


class ParseError(GraphError):
    pass


class UnsupportedOrder(GraphError):
    pass


class EmptySet(GraphError):
    pass


class BadArity(GraphError):
    pass


class BadMatching(GraphError):
    pass


class BadParams(GraphError):
    pass


class BadTrace(GraphError):
    pass


class Undefined(GraphError):
    """The requested quantity is not defined for this graph."""


class UnknownCheck(GraphError):
    pass


class BudgetExceeded(RuntimeError):
    """A search or game table would exceed its configured size limit."""
