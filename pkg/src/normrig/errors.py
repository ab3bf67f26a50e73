"""Exception hierarchy used across the package."""


class NormRigError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(NormRigError, ValueError):
    """A vector, covector or matrix has the wrong dimension for the space."""


class ZeroVectorError(NormRigError, ValueError):
    """An operation that needs a direction was handed the zero vector."""


class NonSmoothPointError(NormRigError, ValueError):
    """The dual map was evaluated at a non-smooth nonzero point."""


class DegenerateEdgeError(NormRigError, ValueError):
    """Coincident endpoints: an edge of the framework has (numerically) zero length."""

    def __init__(self, edge, message=None):
        self.edge = edge
        super().__init__(message or f"degenerate edge {edge[0]}-{edge[1]}: endpoints coincide")


class NotWellPositionedError(NormRigError, ValueError):
    """An edge difference is a non-smooth point of the norm."""

    def __init__(self, edge, message=None):
        self.edge = edge
        super().__init__(
            message or f"edge {edge[0]}-{edge[1]} is not well-positioned (non-smooth difference)"
        )


class FrameworkValidationError(NormRigError, ValueError):
    """Malformed graph, placement or JSON input."""


class SamplingError(NormRigError, RuntimeError):
    """A randomized search failed to produce a usable sample."""


class LieValidationError(NormRigError, RuntimeError):
    """A candidate isometry generator failed the matrix-exponential validation."""


class BoundViolationError(NormRigError, RuntimeError):
    """A computed dimension landed outside a proven bound; indicates numerical failure."""


class InconsistencyError(NormRigError, RuntimeError):
    """Internally inconsistent classification results."""


class TraceError(NormRigError, RuntimeError):
    """Flex tracing failed (corrector divergence, non-smooth configuration, ...)."""


class NoFlexDirectionError(TraceError):
    """The framework has no nontrivial infinitesimal flex to trace."""
