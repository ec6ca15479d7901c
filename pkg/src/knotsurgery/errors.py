"""Exception types.  Each carries the CLI exit status it maps to."""


class KnotSurgeryError(Exception):
    exit_code = 1


class ParamsError(KnotSurgeryError, ValueError):
    """Invalid Levine parameters (empty tuple, bad sign, forbidden zero)."""

    exit_code = 3


class MalformedDiagramError(KnotSurgeryError, ValueError):
    """Diagram code failed arc bookkeeping or could not be parsed."""

    exit_code = 4

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegenerateDeterminantError(KnotSurgeryError, ArithmeticError):
    """Alexander minor vanished; the input is not a knot diagram."""

    exit_code = 5


class InvalidSeifertMatrixError(KnotSurgeryError, ValueError):
    exit_code = 6


class InfeasibleConstantsError(KnotSurgeryError):
    """A ledger term is not dominated by A1 d^3 + A2 sum|c| + A3 (d - sum c)^2."""

    exit_code = 7


class BudgetInfeasibleError(KnotSurgeryError):
    """Projected census size exceeds the record cap."""

    exit_code = 8


class BudgetTooSmallError(KnotSurgeryError, ValueError):
    exit_code = 9


class ChainViolationError(KnotSurgeryError):
    """A step of the binomial lower-bound chain failed numerically."""

    exit_code = 10

    def __init__(self, step: str, n: int):
        self.step = step
        self.n = n
        super().__init__(f"chain step {step!r} fails at n={n}")


class OracleMismatchError(KnotSurgeryError):
    exit_code = 11
