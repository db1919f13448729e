class InfeasibleError(ValueError):
    """Raised when no decomposition of the requested shape can exist (or none is constructed).

    :param condition: the violated condition, e.g. ``"k ≤ n violated"``.
    """

    def __init__(self, condition: str, n: int = None, k: int = None):
        self.condition = condition
        self.n = n
        self.k = k
        where = "" if n is None else f" (n={n}, k={k})"
        super().__init__(f"{condition}{where}")


class ConstructionError(RuntimeError):
    """A construction broke one of its own invariants. Never repaired silently."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        super().__init__(f"{invariant}: {detail}" if detail else invariant)
