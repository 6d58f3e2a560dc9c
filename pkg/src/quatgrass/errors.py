"""Exception types raised by quatgrass operations."""


class QuatGrassError(Exception):
    """Base class for all library errors."""


class ZeroQuaternion(QuatGrassError, ZeroDivisionError):
    """Inverse of a quaternion whose norm is below the zero threshold."""


class DimensionMismatch(QuatGrassError, ValueError):
    """Operands have incompatible shapes."""


class NotQuaternionicStructure(QuatGrassError, ValueError):
    """A complex matrix lacks the block symmetry of an adjoint image."""


class NoConvergence(QuatGrassError, ArithmeticError):
    """The eigenvalue or singular value backend failed to converge."""


class PairingFailure(QuatGrassError, ArithmeticError):
    """Eigenvalues could not be matched into conjugate pairs within tolerance."""


class NotUnitary(QuatGrassError, ValueError):
    """A matrix required to be unitary is not, within tolerance."""


class NotOrthonormalFrame(QuatGrassError, ValueError):
    """Frame columns are not orthonormal within tolerance."""


class CutLocus(QuatGrassError, ArithmeticError):
    """Geodesic interpolation is ill-posed: the endpoints are cut points."""


class RankDeficient(QuatGrassError, ValueError):
    """Input data has lower numerical rank than the request requires."""


class InvalidComponentCount(QuatGrassError, ValueError):
    """Requested component count is outside the valid range."""


class LinearlyDependent(QuatGrassError, ValueError):
    """Columns to orthonormalize are numerically linearly dependent."""


class ImageSizeMismatch(QuatGrassError, ValueError):
    """Images in one set do not share dimensions."""


class MixedDimensions(QuatGrassError, ValueError):
    """Grassmann points in one collection live on different manifolds."""


class InsufficientClassSize(QuatGrassError, ValueError):
    """A class has too few members for the requested train/test split."""


class DecodeError(QuatGrassError, ValueError):
    """An image file could not be decoded."""
