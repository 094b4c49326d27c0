"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad symbol, bad range, ...)."""


class PreconditionError(ValueError):
    """A documented operation precondition does not hold for this input."""


class BudgetError(RuntimeError):
    """An exhaustive search would exceed the configured evaluation budget."""
