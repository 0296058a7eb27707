"""Exception types raised across the package."""


class DimensionMismatchError(ValueError):
    """Two lattice points (or a point and a function) disagree on dimension."""


class EmptyDecompositionError(ValueError):
    """Level-set decomposition requested for x == y."""


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed the configured size cap."""


class NotDiagonallyDominantError(ValueError):
    """A quadratic form failed the diagonal dominance test.

    ``row`` is the (0-based) index of the first offending row.
    """

    def __init__(self, row, slack):
        super().__init__(f"row {row} violates diagonal dominance (slack {slack})")
        self.row = row
        self.slack = slack


class UnboundedDomainError(ValueError):
    """A minimum over an unbounded coordinate range was requested."""


class NonConvexPieceError(ValueError):
    """A univariate table fails g(t-1) + g(t+1) >= 2 g(t)."""

    def __init__(self, index, t):
        super().__init__(f"univariate table is not discrete convex at index {index} (t={t})")
        self.index = index
        self.t = t


class LPError(RuntimeError):
    """The envelope linear program could not be solved reliably."""


class DescentError(RuntimeError):
    """A descent or scaling run left its guaranteed operating regime.

    On a DDM-convex input this never happens, so it usually signals a
    function that is not DDM-convex.
    """


class SpecError(ValueError):
    """A JSON function spec is malformed; ``path`` locates the bad field."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
