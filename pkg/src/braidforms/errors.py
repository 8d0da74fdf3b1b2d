"""Shared exception types."""


class StepBudgetExceeded(RuntimeError):
    """A rewrite loop passed its step budget.

    Signals pathological length blowup, not incorrectness; callers may retry
    with a larger budget.
    """

    def __init__(self, budget: int, context: str = ""):
        self.budget = budget
        msg = f"step budget of {budget} exceeded"
        if context:
            msg += f" while {context}"
        super().__init__(msg)


class NoRuleMatches(RuntimeError):
    """No transformation pattern matched where one must; internal invariant broken."""


class PatternMismatch(ValueError):
    """A rewrite site no longer matches the sequence it was computed for."""
