"""Exception types shared across the pipeline."""


class PeriodForgeError(Exception):
    """Base class for all errors raised by this package."""


class SingularHypersurface(PeriodForgeError):
    """The defining polynomial does not cut out a smooth hypersurface."""


class NonGenericPencil(PeriodForgeError):
    """The chosen hyperplane pencil fails a Lefschetz genericity condition."""


class SmoothnessFailure(PeriodForgeError):
    """The input variety itself is singular, so no pencil can help."""


class UnboundedCell(PeriodForgeError):
    """A Voronoi cell could not be closed off even after adding guard sites."""


class PrecisionExhausted(PeriodForgeError):
    """Working precision hit its cap before the radius contract was met."""


class SingularOnPath(PeriodForgeError):
    """An integration path runs into (or too close to) a pole of the system."""


class InsufficientPrecision(PeriodForgeError):
    """Ball radii are too wide for the requested certified rounding."""


class NotRankOne(PeriodForgeError):
    """A local monodromy matrix M has rank(M - I) != 1."""


class LatticeInconsistency(PeriodForgeError):
    """An exact integer-lattice identity that must hold failed to hold."""


class UnexpectedKernelRank(PeriodForgeError):
    """The heuristic blowup-class kernel has a rank forbidden by theory."""


class RetryExhausted(PeriodForgeError):
    """All pencil/basepoint retries were used up without success."""


class NotSaturated(PeriodForgeError):
    """A sublattice is not saturated, so no direct complement exists."""


class ParseError(PeriodForgeError):
    """Polynomial (or other) input text could not be parsed."""
