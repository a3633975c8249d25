"""Exception types and the global enumeration budget."""

import os

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "SUMSETLAB_BUDGET"


def default_budget():
    """Point-count budget: ``$SUMSETLAB_BUDGET`` if set, else 10**7."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    value = int(raw)
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {raw!r}")
    return value


class SumsetLabError(Exception):
    pass


class BudgetExceeded(SumsetLabError):
    """An enumeration would exceed its size budget.

    ``partial`` carries whatever was completed before the budget was hit
    (for example the prefix of a growth table).
    """

    def __init__(self, what, budget, partial=None, fallback=None):
        self.what = what
        self.budget = budget
        self.partial = partial
        self.fallback = fallback
        msg = f"{what}: budget of {budget} exceeded"
        if fallback is not None:
            msg += f" (fallback bound {fallback})"
        super().__init__(msg)


class InconclusiveError(SumsetLabError):
    """A capped search neither found nor excluded the target."""


class IncompleteFamilyError(SumsetLabError):
    """A minimal-element family was not certified complete."""


class VerificationError(SumsetLabError):
    """A computed object failed a post-hoc check against its stated bound."""
