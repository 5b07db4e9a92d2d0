"""Exception hierarchy for the corrphase package."""


class CorrphaseError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(CorrphaseError):
    """Emitter configuration and q-grid have different dimensions."""


class IndexRangeError(CorrphaseError, KeyError):
    """A q-index falls outside the allocated table range."""


class UndefinedPhaseError(CorrphaseError):
    """Phase requested where the structure-factor magnitude is ~0."""


class DegenerateInputError(CorrphaseError):
    """Emitter-count inversion received g2(0) >= 2."""


class MagnitudeRangeError(CorrphaseError):
    """Recovered |S|^2 lies outside [0, N^2] beyond the clamp tolerance."""


class MagnitudeTooSmallError(CorrphaseError):
    """Closure-cosine inversion needs all three magnitudes above threshold."""


class CosineRangeError(CorrphaseError):
    """Recovered cosine overshoots [-1, 1] beyond the clamp tolerance."""


class ImaginaryResidueError(CorrphaseError):
    """Brute-force pairing sum has a non-vanishing imaginary part."""


class OracleSizeError(CorrphaseError):
    """Brute-force enumeration refused: emitter count above the safety cap."""


class ContradictoryMeasurementsError(CorrphaseError):
    """All phase hypotheses died during retrieval."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InsufficientCoverageError(CorrphaseError):
    """Some q-index has no usable closure equation."""


class AllHypothesesPrunedError(CorrphaseError):
    """Every hypothesis disagreed with the supplied g4 samples."""


class HypothesisCapError(CorrphaseError):
    """Branching exceeded the configured hypothesis cap."""
