"""Exception types shared across the package."""


class ZpkError(Exception):
    """Base class for all errors raised by zpkcodes."""


class BudgetExceeded(ZpkError):
    """An explicit enumeration would exceed the configured size budget."""

    def __init__(self, what, size, budget):
        super().__init__(f"{what}: {size} elements exceeds budget {budget}")
        self.size = size
        self.budget = budget


class InvalidInput(ZpkError, ValueError):
    """Malformed or out-of-range input (bad prime, digit, alphabet mismatch...)."""


class NonIntegralDivision(ZpkError, ArithmeticError):
    """A checked exact division left a remainder."""


#: Default cap on the number of words any single enumeration may produce.
DEFAULT_BUDGET = 1 << 22


def check_budget(what, size, budget=None):
    limit = DEFAULT_BUDGET if budget is None else budget
    if size > limit:
        raise BudgetExceeded(what, size, limit)
