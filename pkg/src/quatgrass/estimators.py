"""Scikit-learn style wrappers around the subspace pipeline.

``GrassmannRepresentation`` turns collections of image sets into subspace
points; ``NearestSubspaceClassifier`` classifies points by mean geodesic
distance to the training clusters.  Both follow the fit/transform/predict
and get_params/set_params conventions, so they compose in a Pipeline.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .classify import LabeledPoint, nearest_cluster_classify
from .grassmann import GrassmannPoint
from .imagesets import ColorImage, ImageSet, set_to_grassmann


def _as_image_set(x):
    if isinstance(x, ImageSet):
        return x
    if isinstance(x, np.ndarray):
        if x.ndim != 4 or x.shape[3] != 3:
            raise ValueError(
                "array image sets must be shaped (views, rows, cols, 3), "
                "got %r" % (x.shape,))
        return ImageSet([ColorImage(view) for view in x])
    return ImageSet([im if isinstance(im, ColorImage) else ColorImage(im)
                     for im in x])


class GrassmannRepresentation(TransformerMixin, BaseEstimator):
    """Transformer: image sets in, subspace points out.

    Parameters
    ----------
    n_components : int
        Subspace dimension k of each point.
    resize : (rows, cols)
        Common working resolution for every view.
    """

    def __init__(self, n_components=9, resize=(20, 20)):
        self.n_components = n_components
        self.resize = resize

    def fit(self, X, y=None):
        """Validate parameters; the transform itself is stateless."""
        n_components = int(self.n_components)
        if n_components < 1:
            raise ValueError("n_components must be positive, got %r"
                             % (self.n_components,))
        rows, cols = (int(v) for v in self.resize)
        if rows < 1 or cols < 1:
            raise ValueError("resize must be positive, got %r" % (self.resize,))
        self.n_components_ = n_components
        self.resize_ = (rows, cols)
        return self

    def transform(self, X):
        """Map each element of X to a GrassmannPoint.

        Elements may be ImageSet instances, arrays shaped
        (views, rows, cols, 3), or lists of per-view arrays.
        """
        check_is_fitted(self, "n_components_")
        return [set_to_grassmann(_as_image_set(x), self.n_components_,
                                 self.resize_) for x in X]


class NearestSubspaceClassifier(ClassifierMixin, BaseEstimator):
    """Nearest-cluster classifier over Grassmannian points.

    A test point gets the label of the training class with the smallest
    mean geodesic distance; ties resolve to the first label in sorted
    order.
    """

    def fit(self, X, y):
        X = list(X)
        y = list(y)
        if len(X) != len(y):
            raise ValueError("%d points but %d labels" % (len(X), len(y)))
        if not X:
            raise ValueError("cannot fit on an empty training set")
        for p in X:
            if not isinstance(p, GrassmannPoint):
                raise TypeError("expected GrassmannPoint, got %r" % type(p))
        self.classes_ = np.unique([str(lbl) for lbl in y])
        self.train_ = [LabeledPoint(p, str(lbl)) for p, lbl in zip(X, y)]
        return self

    def predict(self, X):
        check_is_fitted(self, "train_")
        return np.array([nearest_cluster_classify(p, self.train_) for p in X])
