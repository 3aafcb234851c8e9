"""Exception types shared across the package."""


class GsfsError(Exception):
    """Base class for all package errors."""


class ParseError(GsfsError, ValueError):
    """Raised when symbol text does not conform to the grammar.

    ``offset`` is the byte offset (into the UTF-8 encoding of the input)
    at which the violation was detected and ``expected`` describes the
    token the parser was looking for.
    """

    def __init__(self, offset: int, expected: str, found: str | None = None):
        self.offset = offset
        self.expected = expected
        self.found = found
        msg = f"parse error at offset {offset}: expected {expected}"
        if found is not None:
            msg += f", found {found!r}"
        super().__init__(msg)


class IntegerOverflow(ParseError, OverflowError):
    """An integer literal outside the signed 64-bit range."""

    def __init__(self, offset: int, literal: str):
        self.literal = literal
        super().__init__(offset, "integer within signed 64-bit range", literal)


class InvalidSymbol(GsfsError, ValueError):
    """An operation received a symbol that violates its precondition."""

    def __init__(self, message: str, violations=()):
        self.violations = tuple(violations)
        if self.violations:
            message = message + ": " + "; ".join(str(v) for v in self.violations)
        super().__init__(message)


class NotInImage(GsfsError, ValueError):
    """A local-action symbol does not come from any GSFS symbol.

    ``condition`` is one of ``"t!=0"``, ``"s!=0"``, ``"k1!=f"``.
    """

    def __init__(self, condition: str):
        self.condition = condition
        super().__init__(f"not in image: {condition}")


class NotBranched(GsfsError, ValueError):
    """The double branched cover was requested for a manifold (iota = 0)."""

    def __init__(self):
        super().__init__("not branched: iota=0")


class BoundsError(GsfsError, ValueError):
    pass


class FormatError(GsfsError, ValueError):
    """Malformed census file content; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
