"""Exception hierarchy."""


class CremonaError(Exception):
    """Base class for every error raised by this package."""


class StructuralError(CremonaError, ValueError):
    """Mismatched rings, wrong arities, non-square matrices, bad preconditions."""


class ParseError(CremonaError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)

    def at_line(self, line):
        return ParseError(self.message, line=line, column=self.column)


class BudgetExceeded(CremonaError, RuntimeError):
    """The Groebner engine hit its S-pair reduction budget."""

    def __init__(self, pairs, budget):
        self.pairs = pairs
        self.budget = budget
        super().__init__(f"budget exceeded after {pairs} S-pair reductions (limit {budget})")


class Inconclusive(CremonaError, RuntimeError):
    """Every random draw in the retry window was degenerate."""


class CertificateError(CremonaError, RuntimeError):
    """A construction failed one of its open-condition certificates."""

    def __init__(self, condition, detail=""):
        self.condition = condition
        super().__init__(f"certificate {condition!r} failed" + (f": {detail}" if detail else ""))


class NotAnInverse(CremonaError, ValueError):
    """compose_check found components that are not proportional to the coordinates."""


class UnclassifiedSingularity(CremonaError, RuntimeError):
    """A plane section has a singularity profile outside the supported table."""
