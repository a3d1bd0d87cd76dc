"""Exception types shared across the package."""


class JointRadiusError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(JointRadiusError):
    """Vector or matrix shapes do not agree with the space/tuple."""


class InvalidDescriptor(JointRadiusError):
    """A space descriptor violates its consistency requirements."""


class Unsupported(JointRadiusError):
    """The requested operation is not available for this space."""


class ZeroRadius(JointRadiusError):
    """Downstream object requires w_p > 0 but the radius vanishes."""


class DependentDirection(JointRadiusError):
    """The direction tuple lies in the scaling family of the base tuple."""


class EmptyBasis(JointRadiusError):
    """A tuple subspace was given with no basis elements."""


class InvalidCertificate(JointRadiusError):
    """An orthogonality certificate violates its own invariants."""
