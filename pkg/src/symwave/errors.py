"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """An argument violates the documented preconditions."""


class InvalidPatternError(InvalidInputError):
    """A sign pattern has a negative prefix sum or a nonzero total."""


class AlphabetOverflowError(ValueError):
    """A construction needs a letter larger than the alphabet allows."""


class EmptyTensorError(ValueError):
    """The operation is undefined on the zero tensor."""


class BudgetExceededError(RuntimeError):
    """A brute-force computation would exceed its configured size budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"needs {required} basis monomials but the budget is {budget}; "
            f"raise the budget to at least {required}"
        )
