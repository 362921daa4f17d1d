"""Exception types shared across the package."""


class TrineqError(Exception):
    """Base class for all errors raised by trineq."""


class NotHermitian(TrineqError):
    """Input matrix is not Hermitian (or not square) within tolerance."""


class NoConvergence(TrineqError):
    """Iterative eigensolver exceeded its sweep budget."""


class NotPSD(TrineqError):
    """Matrix has an eigenvalue below the allowed negative floor."""


class NotSymmetric(TrineqError):
    """Matrix expected to be complex symmetric is not, within tolerance."""


class LemmaViolation(TrineqError):
    """The 2x2 diagonal-gap bound failed beyond tolerance.

    The bound is a theorem, so this always indicates a numerical bug in the
    caller or in the singular-value routine.
    """


class ShapeMismatch(TrineqError):
    """Two states or matrices that must share a shape do not."""


class WrongShape(TrineqError):
    """State has a shape the operation does not support."""


class IndexOutOfRange(TrineqError):
    """Generator index outside the declared subsystem dimensions."""


class FormulaMismatch(TrineqError):
    """Two mathematically equivalent formulas disagreed beyond tolerance."""


class InvalidState(TrineqError):
    """A pure state or density matrix violates its invariants."""


class InvalidEnsemble(TrineqError):
    """A rank-2 ensemble violates its invariants."""


class DegenerateDecomposition(TrineqError):
    """A remixed decomposition produced a vanishing component weight."""


class NotUnitary(TrineqError):
    """A basis-change matrix is not unitary within tolerance."""


class StateFileError(TrineqError):
    """A state file could not be parsed; the message carries field context."""
