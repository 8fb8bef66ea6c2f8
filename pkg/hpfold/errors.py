"""
Exception hierarchy shared by the library and the command line.

Each error carries the process exit code the CLI reports for it.
"""
from typing import Optional


class HPFoldError(Exception):
    """Base error with an exit code and a human readable detail"""

    exit_code: int = 1

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class InputError(HPFoldError, ValueError):
    """Malformed input or a violated precondition"""

    exit_code = 1


class VerificationError(HPFoldError):
    """A certificate, invariant or corpus assertion failed"""

    exit_code = 2


class BudgetExceeded(HPFoldError):
    """Search ran out of nodes or time; carries the best value found so far"""

    exit_code = 3

    def __init__(self, detail: str, best_value: int = 0, result=None):
        super().__init__(detail)
        self.best_value = best_value
        self.result = result
