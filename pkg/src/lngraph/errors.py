"""Exception hierarchy. Every error is a ``ValueError`` so callers can catch broadly."""


class LnGraphError(ValueError):
    pass


class InvalidOrderError(LnGraphError):
    """n is below 3 or above the configured cap."""


class UnsupportedOrderError(LnGraphError):
    """The construction is not defined for this n (e.g. cycles below n = 6)."""


class InvalidVertexError(LnGraphError):
    pass


class SameCliqueError(LnGraphError):
    pass


class ParameterError(LnGraphError):
    pass


class SameVertexError(ParameterError):
    pass


class LengthError(ParameterError):
    pass


class ExpansionError(LnGraphError):
    pass


class CapacityError(LnGraphError):
    pass


class SearchBudgetExceeded(RuntimeError):
    """An exhaustive search ran out of node expansions; the answer is unknown."""

    def __init__(self, budget: int):
        super().__init__(f"search exceeded budget of {budget} node expansions")
        self.budget = budget
