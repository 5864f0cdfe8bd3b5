"""Exception hierarchy for the engine.

Errors that correspond to bad user input (files, metric flags) carry enough
position/context information for the CLI to print a useful diagnostic.
"""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class NotAntisymmetric(EngineError):
    """Structure constants violate c^k_ij = -c^k_ji."""


class JacobiRequired(EngineError):
    """Operation refuses to run on an algebra whose Jacobi flag is false."""


class ModeMismatch(EngineError):
    """Operands live over different algebras or real/complex modes."""


class MixedBidegree(EngineError):
    """A pure-bidegree form was required but a mixed one was supplied."""


class NotIntegrable(EngineError):
    """Dolbeault cohomology requested for a non-integrable structure."""


class InvalidMetric(EngineError):
    """Metric input is malformed (shape, Hermitian symmetry, signs)."""


class NotPositiveDefinite(InvalidMetric):
    """Hermitian matrix fails exact positive-definiteness."""


class UnknownName(EngineError):
    """No built-in manifold with the requested name."""


class DslError(EngineError):
    """Base class for structure-file problems; carries a position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "line %d, column %d: %s" % (line, column, message)
        super().__init__(message)


class DslSyntaxError(DslError):
    """Token-level parse failure; message lists what was expected."""


class UndeclaredSymbol(DslError):
    """A coframe symbol outside the declared dimension was referenced."""


class DimensionMismatch(DslError):
    """Dimension header inconsistent with the rest of the file."""


class InternalInvariantViolation(EngineError):
    """An internal consistency check failed; indicates a bug, not bad input."""
