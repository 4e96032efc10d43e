"""Exception hierarchy shared by the whole package."""


class ProjanError(Exception):
    """Base class for every error raised by this package."""


class ParseError(ProjanError):
    """Malformed expression text; carries the 0-based offset of the problem."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at offset {pos}: {text!r}")
        self.text = text
        self.pos = pos


class UnknownVariableError(ParseError):
    """A name in the expression is not among the declared variables."""


class TruncationTooLow(ProjanError):
    """A truncated series does not certify enough terms for the request."""


class TruncationExhausted(ProjanError):
    """The truncation ladder reached its cap without certifying a result."""


class NotAUnit(ProjanError):
    """Series inversion requires order exactly 0."""


class NotAnalytic(ProjanError):
    """A series ratio would have a pole (negative order)."""


class DegenerateInput(ProjanError):
    """Input violates a basic nondegeneracy requirement (e.g. constant f)."""


class DimensionMismatch(ProjanError):
    """Vector/matrix shapes do not line up."""


class SamplerExhausted(ProjanError):
    """A point sampler could not produce enough admissible samples."""


class IndeterminateLimit(ProjanError):
    """All components of a limit vector are unknown below the truncation."""


class ZeroVectorLimit(ProjanError):
    """The limit vector is identically zero, so no projective point exists."""


class DiagonalPointError(ProjanError):
    """An off-diagonal pair of points was required but x = x'."""


class InconsistentBlocksError(ProjanError):
    """Coordinate blocks violate the secant proportionality relation."""


class NotOnVariety(ProjanError):
    """The curve does not satisfy f = 0 up to the certified truncation."""


class NotSmoothPointError(ProjanError):
    """The point is not a smooth point of the hypersurface."""


class NotTangentVectorError(ProjanError):
    """The vector is not tangent to the hypersurface at the point."""


class NotStandardNormalization(ProjanError):
    """The parametrization fails the standard-normalization checks."""


class MultiplicityOneError(ProjanError):
    """Operation requires a singular branch (multiplicity > 1)."""


class HypothesisViolated(ProjanError):
    """An arithmetic hypothesis of a closed-form witness fails."""


class DegenerateNormalForm(ProjanError):
    """No certified coefficient direction independent of the leading one."""


class PreconditionFailed(ProjanError):
    """A campaign's target routine rejected its inputs."""


class ExtrapolationUnstable(ProjanError):
    """The numeric limit oracle could not stabilize an extrapolation."""


class ProblemFileError(ProjanError):
    """A problem file is missing fields or fails validation."""
