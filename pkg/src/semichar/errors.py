"""Exception hierarchy.

Each family maps to one CLI exit code (see ``EXIT_CODES``).
"""


class SemicharError(Exception):
    exit_code = 1


class InputError(SemicharError, ValueError):
    """Malformed or inconsistent input (degree mismatch, cycles, bad JSON...)."""

    exit_code = 2


class BudgetError(SemicharError):
    """An element or group-order budget was exceeded."""

    exit_code = 3

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


class ClosureOverflow(BudgetError):
    pass


class PreconditionError(SemicharError):
    """The input is outside the class of semigroups an operation handles."""

    exit_code = 4


class VerificationError(SemicharError, AssertionError):
    """An internal consistency check failed. Always a bug, never silenced."""

    exit_code = 5


EXIT_CODES = {
    "ok": 0,
    "input": InputError.exit_code,
    "budget": BudgetError.exit_code,
    "precondition": PreconditionError.exit_code,
    "verification": VerificationError.exit_code,
}
