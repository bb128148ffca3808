"""Exception types shared across the package."""


class GraphError(ValueError):
    """An instance violates a structural invariant (dangling endpoint, self-loop, ...)."""


class PreconditionViolation(Exception):
    """A query was issued outside the regime where the algorithm is exact.

    Raised instead of returning a possibly wrong answer, e.g. when a
    prescribed-edge search is requested on an instance with an alternating
    cycle (the unrestricted problem is NP-complete).
    """


class BudgetExhausted(Exception):
    """A budgeted exhaustive search ran out of nodes before deciding."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} nodes exhausted")
        self.budget = budget


class GuardExceeded(Exception):
    """The brute-force oracle refused an instance above its size guard."""


class CertificateError(ValueError):
    """A certificate failed validation."""


class InputError(ValueError):
    """An instance or certificate document is malformed."""
