"""From sets of color images to points on a quaternionic Grassmannian.

Each image becomes a pure-quaternion matrix (red, green, blue on the three
imaginary axes), is vectorized column-major, and the columns for one set are
centered and reduced by quaternionic principal component analysis.  The
orthonormalized span of the leading components is the set's subspace.
"""

from __future__ import annotations

import numpy as np
from PIL import Image

from .errors import (
    DecodeError,
    ImageSizeMismatch,
    InvalidComponentCount,
    LinearlyDependent,
    RankDeficient,
)
from .grassmann import from_frame
from .quaternion import QuatMatrix, _mgs_pass
from .spectra import TAU_RANK_REL, qsvd

SUPPORTED_EXTENSIONS = {".png", ".jpg", ".jpeg"}

# Columns whose Gram-Schmidt residual drops below this fraction of their
# original norm count as linearly dependent.
_MGS_REL_TOL = 1e-10

_BILINEAR = getattr(Image, "Resampling", Image).BILINEAR


class ColorImage:
    """One RGB image held as float64 channel values in [0, 255].

    Grayscale input is promoted by replicating the single channel.
    """

    __slots__ = ("channels",)

    def __init__(self, channels):
        arr = np.asarray(channels, dtype=float)
        if arr.ndim == 2:
            arr = np.repeat(arr[:, :, None], 3, axis=2)
        if arr.ndim != 3 or arr.shape[2] != 3 or arr.shape[0] == 0 or arr.shape[1] == 0:
            raise ValueError(
                "expected channels shaped (rows, cols, 3), got %r" % (arr.shape,))
        if not np.all(np.isfinite(arr)):
            raise ValueError("image contains non-finite values")
        if arr.min() < 0.0 or arr.max() > 255.0:
            raise ValueError(
                "channel values must lie in [0, 255], got range [%g, %g]"
                % (arr.min(), arr.max()))
        self.channels = arr

    @classmethod
    def from_file(cls, path):
        """Decode an image file into RGB; failures raise DecodeError."""
        try:
            with Image.open(path) as im:
                rgb = im.convert("RGB")
                arr = np.asarray(rgb, dtype=float)
        except (OSError, ValueError, SyntaxError) as exc:
            raise DecodeError("cannot decode %s: %s" % (path, exc)) from exc
        return cls(arr)

    @property
    def rows(self):
        return self.channels.shape[0]

    @property
    def cols(self):
        return self.channels.shape[1]

    @property
    def r(self):
        return self.channels[:, :, 0]

    @property
    def g(self):
        return self.channels[:, :, 1]

    @property
    def b(self):
        return self.channels[:, :, 2]

    def resized(self, rows, cols):
        """Bilinear resample to rows x cols, channel by channel."""
        if rows < 1 or cols < 1:
            raise ValueError("target size must be positive")
        out = np.empty((rows, cols, 3))
        for c in range(3):
            band = Image.fromarray(self.channels[:, :, c].astype(np.float32),
                                   mode="F")
            # PIL size argument is (width, height)
            out[:, :, c] = np.asarray(band.resize((cols, rows), _BILINEAR),
                                      dtype=float)
        return ColorImage(np.clip(out, 0.0, 255.0))


class ImageSet:
    """A nonempty list of same-size images with a class label and object id."""

    __slots__ = ("images", "label", "object_id")

    def __init__(self, images, label="", object_id=""):
        images = list(images)
        if not images:
            raise ValueError("an image set needs at least one image")
        for im in images:
            if not isinstance(im, ColorImage):
                raise TypeError("expected ColorImage, got %r" % type(im))
        first = (images[0].rows, images[0].cols)
        for i, im in enumerate(images):
            if (im.rows, im.cols) != first:
                raise ImageSizeMismatch(
                    "image %d is %dx%d, expected %dx%d"
                    % (i, im.rows, im.cols, first[0], first[1]))
        self.images = images
        self.label = str(label)
        self.object_id = str(object_id)

    def __len__(self):
        return len(self.images)

    def __iter__(self):
        return iter(self.images)


def images_from_dir(path, extensions=None):
    """All decodable images directly inside a directory, sorted by file name."""
    import pathlib

    exts = SUPPORTED_EXTENSIONS if extensions is None else extensions
    files = sorted(p for p in pathlib.Path(path).iterdir()
                   if p.is_file() and p.suffix.lower() in exts)
    return [ColorImage.from_file(p) for p in files]


def image_to_pure_quat(image):
    """Encode an image as a pure-quaternion matrix: r i + g j + b k."""
    return QuatMatrix.from_parts(
        np.zeros((image.rows, image.cols)), image.r, image.g, image.b)


def vectorize(a):
    """Stack a matrix's columns into a single column (column-major order)."""
    return QuatMatrix(a.ca.reshape(-1, 1, order="F"),
                      a.cb.reshape(-1, 1, order="F"))


def quaternion_pca(data, components):
    """Leading principal directions of centered columns, unnormalized.

    Works on the small Gram matrix of the centered columns, so the cost is
    governed by the number of columns rather than their length.  The
    returned matrix has ``components`` orthogonal (not yet orthonormal)
    columns spanning the leading principal subspace.

    Raises
    ------
    InvalidComponentCount
        If ``components`` is outside 1..column count.
    RankDeficient
        If the requested component count exceeds the centered rank;
        centering always costs one direction.
    """
    n, p = data.shape
    components = int(components)
    if not 1 <= components <= p:
        raise InvalidComponentCount(
            "component count must lie in 1..%d, got %d" % (p, components))
    centered = QuatMatrix(data.ca - data.ca.mean(axis=1, keepdims=True),
                          data.cb - data.cb.mean(axis=1, keepdims=True))
    gram = centered.adjoint() @ centered
    res = qsvd(gram)
    top = res.sigma[0] if res.sigma.size else 0.0
    if res.sigma[components - 1] <= TAU_RANK_REL * max(top, 1e-300):
        raise RankDeficient(
            "centered data has rank below %d (gram spectrum drops to %.3e)"
            % (components, res.sigma[components - 1]))
    return centered @ res.left_vectors.col_block(0, components)


def mgs_orthonormalize(a):
    """Orthonormalize columns left to right by quaternionic Gram-Schmidt.

    Raises
    ------
    LinearlyDependent
        If a column's residual falls below ``_MGS_REL_TOL`` times its
        original norm.
    """
    n, m = a.shape
    cols = [(a.ca[:, j], a.cb[:, j]) for j in range(m)]
    norms = [float(np.sqrt(np.linalg.norm(ca) ** 2 + np.linalg.norm(cb) ** 2))
             for ca, cb in cols]
    out, _, skipped = _mgs_pass(cols, [_MGS_REL_TOL * nv for nv in norms])
    if skipped:
        raise LinearlyDependent(
            "columns %r are linearly dependent on earlier ones" % (skipped,))
    return QuatMatrix.from_columns(out)


def set_to_grassmann(image_set, components, resize=(20, 20)):
    """Map an image set to its subspace point.

    Pipeline: resize every view, encode as pure quaternions, vectorize
    column-major, center, reduce by quaternionic PCA to ``components``
    directions, orthonormalize, and take the span.

    Parameters
    ----------
    image_set : ImageSet
    components : int
        Subspace dimension k; the set needs at least k + 1 views because
        centering costs one rank.
    resize : (rows, cols)
        Common working resolution.

    Raises
    ------
    InvalidComponentCount, RankDeficient, LinearlyDependent
        Propagated from the stages above.
    """
    components = int(components)
    if components < 1:
        raise InvalidComponentCount(
            "component count must be positive, got %d" % components)
    if len(image_set) < components + 1:
        raise RankDeficient(
            "need at least %d views for %d components after centering, got %d"
            % (components + 1, components, len(image_set)))
    rows, cols = int(resize[0]), int(resize[1])
    columns = [vectorize(image_to_pure_quat(im.resized(rows, cols)))
               for im in image_set]
    data = QuatMatrix.hstack(columns)
    scores = quaternion_pca(data, components)
    return from_frame(mgs_orthonormalize(scores))
