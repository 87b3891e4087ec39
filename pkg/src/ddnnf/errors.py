"""Exception types shared across the toolkit."""


class DdnnfError(Exception):
    """Base class for all errors raised by this package."""


class InputFormatError(DdnnfError):
    """A text input (DIMACS, NNF, BDD, dtree) is malformed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


class InconsistentContextError(DdnnfError, ValueError):
    """A literal set contains some atom in both polarities."""


class NotSmoothError(DdnnfError, ValueError):
    pass


class NotFreeError(DdnnfError, ValueError):
    """A BDD tests some variable twice on a computation path."""

    def __init__(self, node, var):
        self.node = node
        self.var = var
        super().__init__("node %d tests variable %d which is tested again below it" % (node, var))


class OracleLimitError(DdnnfError, ValueError):
    pass


class StaleStateError(DdnnfError, ValueError):
    pass
