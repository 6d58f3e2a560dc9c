"""Color image sets as points on the quaternionic Grassmannian.

The toolkit represents each set of color images as a low-dimensional
right-quaternionic subspace, measures set similarity by the closed-form
geodesic distance between subspaces, and classifies sets by nearest
cluster.  See the README for the command line interface.
"""

from .classify import (
    LabeledPoint,
    ThreeSetResult,
    TrialReport,
    cross_validate,
    nearest_cluster_classify,
    three_set_recognition,
)
from .errors import (
    CutLocus,
    DecodeError,
    DimensionMismatch,
    ImageSizeMismatch,
    InsufficientClassSize,
    InvalidComponentCount,
    LinearlyDependent,
    MixedDimensions,
    NoConvergence,
    NotOrthonormalFrame,
    NotQuaternionicStructure,
    NotUnitary,
    PairingFailure,
    QuatGrassError,
    RankDeficient,
    ZeroQuaternion,
)
from .estimators import GrassmannRepresentation, NearestSubspaceClassifier
from .grassmann import (
    DistanceMatrix,
    GrassmannPoint,
    distance_matrix,
    from_frame,
    geodesic_distance,
    geodesic_interpolate,
)
from .imagesets import (
    ColorImage,
    ImageSet,
    image_to_pure_quat,
    images_from_dir,
    mgs_orthonormalize,
    quaternion_pca,
    set_to_grassmann,
    vectorize,
)
from .quaternion import Quaternion, QuatMatrix, chi, from_chi
from .spectra import (
    Qsvd,
    UnitaryEig,
    complex_eigenvalues,
    matrix_exp,
    qsvd,
    standard_eigenvalues,
    unitary_eig,
    unitary_log,
)

__version__ = "0.1.0"

__all__ = [
    "ColorImage",
    "CutLocus",
    "DecodeError",
    "DimensionMismatch",
    "DistanceMatrix",
    "GrassmannPoint",
    "GrassmannRepresentation",
    "ImageSet",
    "ImageSizeMismatch",
    "InsufficientClassSize",
    "InvalidComponentCount",
    "LabeledPoint",
    "LinearlyDependent",
    "MixedDimensions",
    "NearestSubspaceClassifier",
    "NoConvergence",
    "NotOrthonormalFrame",
    "NotQuaternionicStructure",
    "NotUnitary",
    "PairingFailure",
    "Qsvd",
    "QuatGrassError",
    "QuatMatrix",
    "Quaternion",
    "RankDeficient",
    "ThreeSetResult",
    "TrialReport",
    "UnitaryEig",
    "ZeroQuaternion",
    "chi",
    "complex_eigenvalues",
    "cross_validate",
    "distance_matrix",
    "from_chi",
    "from_frame",
    "geodesic_distance",
    "geodesic_interpolate",
    "image_to_pure_quat",
    "images_from_dir",
    "matrix_exp",
    "mgs_orthonormalize",
    "nearest_cluster_classify",
    "qsvd",
    "quaternion_pca",
    "set_to_grassmann",
    "standard_eigenvalues",
    "three_set_recognition",
    "unitary_eig",
    "unitary_log",
    "vectorize",
]
