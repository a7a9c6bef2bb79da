"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class ConsistencyError(ArithmeticError):
    """Two independent computations disagree, or a cited guarantee failed."""


class UnsupportedConfiguration(ValueError):
    """A formula branch exists mathematically but is deliberately not implemented."""


class PremiseRejected(ValueError):
    """A construction was refused because one of its premises does not hold."""

    def __init__(self, premise, detail=""):
        self.premise = premise
        self.detail = detail
        msg = premise if not detail else f"{premise}: {detail}"
        super().__init__(msg)


class NotFoundWithinBudget(LookupError):
    """A search ended without a hit. Not a proof of nonexistence.

    ``state`` records how far the search got (limit, candidates examined, ...).
    """

    def __init__(self, message, **state):
        self.state = state
        super().__init__(message)
