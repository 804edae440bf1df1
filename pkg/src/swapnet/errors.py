"""Exception types shared across the package."""


class SwapnetError(Exception):
    """Base class for all errors raised by this package."""


class InvalidModulusError(SwapnetError, ValueError):
    """A modulus smaller than 2 was supplied."""


class InvalidPrimeError(SwapnetError, ValueError):
    """An argument that must be prime is not."""


class InconclusiveError(SwapnetError):
    """A bounded search ran out of budget before reaching a verdict.

    ``steps`` records how many steps were taken before giving up.
    """

    def __init__(self, message: str, steps: int):
        super().__init__(message)
        self.steps = steps


class SizeBudgetError(SwapnetError):
    """An operation would exceed its memory/size budget."""


class NumericError(SwapnetError):
    """A floating-point computation failed its accuracy requirement.

    ``residual`` carries the best achieved residual when available.
    """

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class MismatchError(SwapnetError):
    """Two routes that must agree produced different values.

    ``index`` is the first position at which they disagree.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class VerificationError(SwapnetError):
    """An internal cross-check that should always hold has failed."""
