"""Exception types shared across the package."""


class FormatError(ValueError):
    """A corpus file (dataset line, gold block, labels file) is malformed."""


class ParseError(ValueError):
    """A dependency-parse document cannot be read."""


class ConsistencyError(ParseError):
    """A parse was read but violates a structural invariant."""
