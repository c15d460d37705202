"""Exception hierarchy shared by every module."""


class DissimError(Exception):
    """Base class for all errors raised by the package."""


class GraphError(DissimError, ValueError):
    """A weighted graph breaks one of its structural invariants."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class NonPositiveWeight(GraphError):
    pass


class ExternalNotVertex(GraphError):
    pass


class UnknownEdge(GraphError):
    pass


class ParseError(DissimError, ValueError):
    """A document could not be decoded; the message names the offending field."""

    def __init__(self, message, field=None, cause=None):
        self.field = field
        self.cause = cause
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)


class Disconnected(DissimError):
    """No connected subgraph contains all the requested terminals."""

    def __init__(self, terminals):
        self.terminals = tuple(sorted(terminals))
        super().__init__(f"terminals {list(self.terminals)} are not in one connected component")


class TooLarge(DissimError):
    pass


class WrongN(DissimError, ValueError):
    pass


class PreconditionViolated(DissimError, ValueError):
    pass


class VerificationFailed(DissimError):
    """A construction did not reproduce its input family. Always a bug."""


class NotRealizable(DissimError):
    """The family fails the realizability conditions of the requested class."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__("; ".join(verdict.violations) or "not realizable")
