"""Exception hierarchy shared by all modules.

NegativeResult subclasses signal a mathematically meaningful "no" (exit
code 2 in the CLI), as opposed to operational failures (exit code 1).
"""


class SeriesError(Exception):
    """Base class for all library errors."""


class ConductorTooSmall(SeriesError):
    """The exact backend cannot represent the requested root of unity."""

    def __init__(self, order, conductor):
        super().__init__(
            f"order-{order} roots of unity need {order} | conductor, "
            f"but conductor is {conductor}"
        )
        self.order = order
        self.conductor = conductor


class RootNotRepresentable(SeriesError):
    """An n-th root does not exist inside the configured cyclotomic field."""


class ZeroInput(SeriesError):
    """Root extraction of zero."""


class CompositionUndefined(SeriesError):
    """A o B needs ord B >= 1."""


class OrderMismatch(SeriesError):
    """Valuations of the operands are incompatible with the operation."""


class ToleranceAmbiguous(SeriesError):
    """The approx backend cannot decide a comparison within tolerance."""


class NegativeResult(SeriesError):
    """A criterion that can legitimately fail did fail."""


class NotSymmetric(NegativeResult):
    """Series support is not contained in a single residue class mod m."""

    def __init__(self, index, modulus):
        super().__init__(f"support index {index} breaks the mod-{modulus} pattern")
        self.index = index
        self.modulus = modulus


class NoSolution(NegativeResult):
    """The functional equation has no solution."""


class NoFactor(NegativeResult):
    """No common compositional factor of the requested order exists."""


class NotEquivalent(NegativeResult):
    """Two decompositions are not related by unit bridges."""


class NotADoubleDecomposition(NegativeResult):
    """The four inputs do not compose to the same series."""


class NotConjugate(NegativeResult):
    """A generator set is not conjugate to a monomial semigroup."""

    def __init__(self, index):
        super().__init__(f"generator {index} fails the shared-Boettcher test")
        self.index = index
