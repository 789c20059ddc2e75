"""Exception types shared across the package."""
from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all domain errors."""


class BuildError(AlgebraError):
    """The input cannot be assembled into an algebra at all (bad dimensions,
    unknown names, cyclic order, missing least element or missing bounds)."""


class LawViolationError(AlgebraError):
    """Strict build refused: the assembled tables break at least one law."""

    def __init__(self, report):
        self.report = report
        laws = sorted({v.law for v in report.violations})
        super().__init__(
            "law violations: " + ", ".join(laws)
        )


class NotResiduatedError(AlgebraError):
    """The monoid operation has no residual over the given order.

    `pairs` holds every (x, z) index pair whose solution set {w : x*w <= z}
    is empty or has no unique greatest element.
    """

    def __init__(self, pairs):
        self.pairs = list(pairs)
        first = self.pairs[0]
        super().__init__(
            f"no residual at {len(self.pairs)} pair(s), first {first}"
        )


class NotAFilterError(AlgebraError):
    """A subset handed to a filter-only operation fails a filter condition."""

    def __init__(self, condition, witness):
        self.condition = condition
        self.witness = witness
        super().__init__(f"not a filter: {condition} fails at {witness}")


class CongruenceError(AlgebraError):
    """The induced relation or quotient structure is inconsistent; either the
    input tables are invalid or there is an engine bug."""


class WellDefinednessError(CongruenceError):
    """A block operation depends on the choice of representatives."""

    def __init__(self, op, x, x_alt, y, y_alt):
        self.op = op
        self.witness = (x, x_alt, y, y_alt)
        super().__init__(
            f"operation {op} not well defined on blocks: "
            f"representatives ({x}, {y}) vs ({x_alt}, {y_alt}) disagree"
        )


class ParseError(AlgebraError):
    """Positioned error in an algebra description file."""

    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")
