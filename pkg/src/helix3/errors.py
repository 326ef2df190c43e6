"""Exception types shared across the package."""


class HelixError(Exception):
    """Base class for every error raised by this package."""


class InvalidParams(HelixError):
    """Curvature/torsion pair violates the admissibility rules."""


class DegenerateInput(HelixError):
    """Input vectors are rank deficient where independence is required."""


class InvalidFrame(HelixError):
    """A frame matrix fails its orthogonality or tangency contract."""


class InsufficientSpan(HelixError):
    """Sample window is too short for the requested frequency separation."""


class SpectrumMismatch(HelixError):
    """Two objects that must share angular frequencies do not."""


class IndexOutOfStencil(HelixError):
    """Requested index lacks room for the finite-difference stencil."""


class DegenerateCurvature(HelixError):
    """Curvature is numerically zero where a normal direction is needed."""


class MissingFrames(HelixError):
    """Operation requires frame samples but none are attached."""


class NotPeriodic(HelixError):
    """A period was requested for a curve not classified as periodic."""


class DegenerateTorus(HelixError):
    """Torus data requested for a curve that degenerates to a circle."""


class NearPole(HelixError):
    """Point is too close to the projection pole."""


class NoPoleFound(HelixError):
    """No admissible projection pole found within the candidate budget."""


class IoError(HelixError):
    """Filesystem read/write failure."""


class FormatError(HelixError):
    """File content does not match the expected schema."""
