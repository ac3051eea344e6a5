"""Exception hierarchy; each class carries the CLI exit code it maps to."""


class F4RError(Exception):
    exit_code = 1


class ParseError(F4RError, ValueError):
    exit_code = 2


class PreconditionError(F4RError, ValueError):
    """A structural precondition failed, e.g. a generator does not divide X^n - 1."""

    exit_code = 3


class BudgetExceeded(F4RError, RuntimeError):
    exit_code = 4


class VerificationError(F4RError, AssertionError):
    exit_code = 5
