class InvariantViolation(RuntimeError):
    """A mathematical invariant that the theory guarantees did not hold.

    Seeing this means a bug (or a wrong sign convention), never bad input.
    """


class BudgetExceeded(RuntimeError):
    """Enumeration would exceed the configured seed budget."""
