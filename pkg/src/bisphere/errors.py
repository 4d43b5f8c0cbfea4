"""Exceptions shared across the package."""


class BisphereError(Exception):
    pass


class PrecisionExhausted(BisphereError):
    """An interval computation could not reach the requested width at the
    maximum working precision."""

    def __init__(self, stage, max_bits):
        super().__init__(f"precision exhausted in {stage} at {max_bits} bits")
        self.stage = stage
        self.max_bits = max_bits


class BudgetExceeded(BisphereError):
    """A combinatorial search exceeded its node budget."""

    def __init__(self, stage, budget):
        super().__init__(f"node budget {budget} exceeded in {stage}")
        self.stage = stage
        self.budget = budget


class DegenerateElimination(BisphereError):
    """A resultant in the elimination chain vanished identically."""

    def __init__(self, stage):
        super().__init__(f"degenerate elimination at stage {stage}")
        self.stage = stage


class BaseMismatch(BisphereError):
    """Arithmetic attempted between radical elements over different base values."""


class FoldInconsistency(BisphereError):
    """A shell complex is combinatorially valid but not geometrically realizable."""

    def __init__(self, detail):
        super().__init__(f"embedding fold failed: {detail}")
        self.detail = detail
