"""Nearest-cluster classification and repeated random-split evaluation.

A labeled point is classified by the class whose training points have the
smallest mean geodesic distance to it.  Ties go to the first class in sorted
label order; that rule is deterministic and documented rather than clever.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InsufficientClassSize
from .grassmann import DistanceMatrix, GrassmannPoint, distance_matrix, geodesic_distance


@dataclass
class LabeledPoint:
    """A Grassmannian point with its class label and an optional object id."""

    point: GrassmannPoint
    label: str
    object_id: str = ""


@dataclass
class TrialReport:
    """Outcome of repeated random-split evaluation.

    ``per_trial_accuracy`` entries are percentages; ``std`` is the sample
    standard deviation (ddof=1), defined as 0.0 for a single trial.
    """

    protocol: dict
    seed: int
    per_trial_accuracy: list = field(default_factory=list)
    mean: float = 0.0
    std: float = 0.0


def nearest_cluster_classify(test, train):
    """Label of the training class with the smallest mean distance.

    Parameters
    ----------
    test : GrassmannPoint
    train : sequence of LabeledPoint

    Returns
    -------
    str
        Predicted label; ties resolve to the first class in sorted order.
    """
    train = list(train)
    if not train:
        raise ValueError("no training points")
    classes = sorted({lp.label for lp in train})
    best_label = None
    best_mean = np.inf
    for label in classes:
        ds = [geodesic_distance(test, lp.point)
              for lp in train if lp.label == label]
        mean = float(np.mean(ds))
        if mean < best_mean:
            best_mean = mean
            best_label = label
    return best_label


@dataclass
class ThreeSetResult:
    """Which two of three sets show the same object.

    ``distances`` carries the three pairwise values under keys "AB", "AC",
    "BC"; ``same_pair`` names the closest pair and ``outlier`` the third.
    """

    same_pair: tuple
    outlier: str
    distances: dict


def three_set_recognition(a, b, c):
    """Pick the closest pair among three points; ties go in AB, AC, BC order."""
    dists = {
        "AB": geodesic_distance(a, b),
        "AC": geodesic_distance(a, c),
        "BC": geodesic_distance(b, c),
    }
    winner = min(("AB", "AC", "BC"), key=lambda k: dists[k])
    outlier = ({"A", "B", "C"} - set(winner)).pop()
    return ThreeSetResult(same_pair=tuple(winner), outlier=outlier,
                          distances=dists)


def _classify_row(row, train_by_class, classes):
    best_label = None
    best_mean = np.inf
    for label in classes:
        mean = float(np.mean(row[train_by_class[label]]))
        if mean < best_mean:
            best_mean = mean
            best_label = label
    return best_label


def cross_validate(points, train_per_class=5, trials=10, seed=0, *,
                   distances=None, protocol_extra=None, threads=None):
    """Repeated random-split nearest-cluster evaluation.

    Each trial splits every class uniformly at random into
    ``train_per_class`` training points and the rest as test points, then
    classifies the test points against the training clusters.  The pairwise
    distance matrix is computed once and shared across trials.

    Parameters
    ----------
    points : sequence of LabeledPoint
    train_per_class : int
        Training points drawn per class; every class needs at least one
        more point than this.
    trials : int
    seed : int
        Trial ``t`` draws from a generator seeded with (seed, t), so single
        trials are reproducible in isolation.
    distances : DistanceMatrix or ndarray or None
        Precomputed pairwise distances aligned with ``points``; None
        computes them here.
    protocol_extra : dict or None
        Extra key/value pairs recorded in the report's protocol section.
    threads : int or None
        Worker threads for the distance matrix computation.

    Raises
    ------
    InsufficientClassSize
        If any class has fewer than ``train_per_class + 1`` points.
    """
    points = list(points)
    if not points:
        raise ValueError("no points given")
    train_per_class = int(train_per_class)
    trials = int(trials)
    if train_per_class < 1:
        raise ValueError("train_per_class must be positive")
    if trials < 1:
        raise ValueError("trials must be positive")

    by_class = {}
    for i, lp in enumerate(points):
        by_class.setdefault(lp.label, []).append(i)
    classes = sorted(by_class)
    for label in classes:
        size = len(by_class[label])
        if size < train_per_class + 1:
            raise InsufficientClassSize(
                "class %r has %d points; need at least %d to hold one out"
                % (label, size, train_per_class + 1))

    if distances is None:
        dm = distance_matrix([lp.point for lp in points],
                             labels=[lp.object_id or str(i)
                                     for i, lp in enumerate(points)],
                             threads=threads)
        values = dm.values
    elif isinstance(distances, DistanceMatrix):
        values = distances.values
    else:
        values = np.asarray(distances, dtype=float)
    if values.shape != (len(points), len(points)):
        raise ValueError(
            "distance matrix shape %r does not match %d points"
            % (values.shape, len(points)))

    accuracies = []
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        train_by_class = {}
        test_idx = []
        for label in classes:
            perm = rng.permutation(np.array(by_class[label]))
            train_by_class[label] = perm[:train_per_class]
            test_idx.extend(perm[train_per_class:])
        correct = 0
        for i in test_idx:
            predicted = _classify_row(values[i], train_by_class, classes)
            if predicted == points[i].label:
                correct += 1
        accuracies.append(100.0 * correct / len(test_idx))

    mean = float(np.mean(accuracies))
    std = 0.0 if trials == 1 else float(np.std(accuracies, ddof=1))
    protocol = {"train_per_class": train_per_class, "trials": trials}
    if protocol_extra:
        protocol.update(protocol_extra)
    return TrialReport(protocol=protocol, seed=int(seed),
                       per_trial_accuracy=[float(a) for a in accuracies],
                       mean=mean, std=std)
