"""Exception types shared across the package.

Structural problems with operators (wrong shape, failed invariants) raise
subclasses of ``ValidationError`` so callers can catch the whole family;
the class name itself states the violated invariant.
"""


class ValidationError(ValueError):
    """An operator failed one of its structural invariants."""


class NotHermitian(ValidationError):
    """Asymmetry ``M - M†`` exceeds the Hermiticity tolerance."""


class TraceNotOne(ValidationError):
    """A density matrix candidate has ``|Tr - 1| > 1e-12``."""


class NotPSD(ValidationError):
    """A density matrix candidate has an eigenvalue below ``-1e-12``."""


class NegativeSpectrum(ValidationError):
    """A matrix power was requested for a spectrum below ``-1e-12``."""


class DimensionMismatch(ValidationError):
    """Two operators that must share a dimension do not."""


class NoConvergence(RuntimeError):
    """The eigensolver failed to converge."""


class InvalidS(ValueError):
    """The exponent ``s`` lies outside ``[1/2, inf)``."""


class DomainError(ValueError):
    """A scalar argument lies outside its documented domain."""


class NonPositiveInput(ValueError):
    """The scalar ratio requires strictly positive arguments."""


class MaximallyMixedState(ValueError):
    """Operation undefined for the maximally mixed state."""


class ScalarObservable(ValueError):
    """The observable has a single eigenvalue cluster, so no gap exists."""
