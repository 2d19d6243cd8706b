"""Exception types shared across the library."""


class QcorrError(Exception):
    """Base class for all qcorr errors."""


class NonPhysical(QcorrError):
    """State parameters do not describe a positive, unit-trace density matrix."""


class OutOfRange(QcorrError):
    """A channel or grid parameter lies outside its allowed interval."""


class DegenerateOrdering(QcorrError):
    """Two of the |r_i| coincide, so the piecewise case analysis is undefined."""


class NotEntangled(QcorrError):
    """An entangled state is required (e.g. for sudden-death times)."""


class BranchUnknown(QcorrError):
    """The caller must supply the active branch or piece label."""


class WindowViolation(QcorrError):
    """The requested point lies outside the validity window of the active branch."""


class EmptyWindow(QcorrError):
    """The initial state is separable, so the discord-vs-entanglement window is empty."""


class NumericalFailure(QcorrError):
    """An eigensolve or SVD did not converge."""
