"""Operation accounting for the decomposition engines."""


class OpCounter:
    """Tally of monomial-level operations (comparisons and divisibility tests).

    One counter is created per engine invocation; none of the library state
    is global, so independent decompositions never share a counter.
    """

    __slots__ = ("ops",)

    def __init__(self):
        self.ops = 0

    def add(self, k=1):
        self.ops += k

    def __repr__(self):
        return f"OpCounter(ops={self.ops})"
