"""Exception hierarchy shared across the pipeline.

CrickpredError is the root for everything the toolkit raises on bad data or
bad usage; the CLI maps it to exit code 2. Anything else escaping to the CLI
is an internal error (exit code 3).
"""


class CrickpredError(Exception):
    """Base class for all data/usage errors raised by this package."""


class MalformedRow(CrickpredError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class SchemaMismatch(CrickpredError):
    pass


class OrderViolation(CrickpredError):
    pass


class UnknownAttribute(CrickpredError):
    pass


class EmptyRoster(CrickpredError):
    pass


class NotReciprocal(CrickpredError):
    pass


class NonPositiveEntry(CrickpredError):
    pass


class NoConvergence(CrickpredError):
    pass


class DegenerateClass(CrickpredError):
    pass


class EmptyDataset(CrickpredError):
    pass


class AllZero(CrickpredError):
    pass


class DegenerateSplit(CrickpredError):
    pass


class TooFewRows(CrickpredError):
    pass


class ShapeMismatch(CrickpredError):
    pass


class DeserializeError(CrickpredError):
    pass


class VersionError(CrickpredError):
    pass
