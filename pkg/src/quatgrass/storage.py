"""On-disk formats: matrices and subspace points as JSON, distances as CSV.

All JSON is written with sorted keys, two-space indentation, and a trailing
newline, so saving the same object twice produces byte-identical files.
"""

from __future__ import annotations

import csv
import json
import pathlib

import numpy as np

from .classify import TrialReport
from .grassmann import DistanceMatrix, GrassmannPoint
from .quaternion import QuatMatrix


def _write_json(obj, path):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    pathlib.Path(path).write_text(text, encoding="utf-8")


def _read_json(path):
    return json.loads(pathlib.Path(path).read_text(encoding="utf-8"))


def quat_matrix_to_dict(a):
    """Plain-data form: dimensions plus the four real component grids."""
    n, m = a.shape
    return {
        "n": n,
        "m": m,
        "w": a.w.tolist(),
        "x": a.x.tolist(),
        "y": a.y.tolist(),
        "z": a.z.tolist(),
    }


def quat_matrix_from_dict(data):
    try:
        n = int(data["n"])
        m = int(data["m"])
        parts = [np.asarray(data[key], dtype=float) for key in "wxyz"]
    except (KeyError, TypeError) as exc:
        raise ValueError("malformed matrix record: %s" % exc) from exc
    for key, p in zip("wxyz", parts):
        if p.shape != (n, m):
            raise ValueError(
                "component %s has shape %r, expected (%d, %d)"
                % (key, p.shape, n, m))
    return QuatMatrix.from_parts(*parts)


def save_quat_matrix(a, path):
    _write_json(quat_matrix_to_dict(a), path)


def load_quat_matrix(path):
    return quat_matrix_from_dict(_read_json(path))


def save_grassmann_point(point, path):
    """Write a subspace point as its projector record plus the dimension k."""
    record = quat_matrix_to_dict(point.projector)
    record["k"] = point.subspace_dim
    _write_json(record, path)


def load_grassmann_point(path):
    """Read a subspace point; the constructor re-validates the projector."""
    data = _read_json(path)
    if "k" not in data:
        raise ValueError("subspace record in %s lacks the k field" % path)
    return GrassmannPoint(quat_matrix_from_dict(data), int(data["k"]))


def save_distance_matrix(dm, path):
    """CSV with a leading label column and row; cells are str(float)."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["label"] + list(dm.labels))
        for label, row in zip(dm.labels, dm.values):
            writer.writerow([label] + [str(float(v)) for v in row])


def load_distance_matrix(path):
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or not rows[0] or rows[0][0] != "label":
        raise ValueError("%s is not a distance matrix file" % path)
    labels = rows[0][1:]
    count = len(labels)
    values = np.zeros((count, count))
    body = rows[1:]
    if len(body) != count:
        raise ValueError(
            "%s has %d data rows for %d labels" % (path, len(body), count))
    for i, row in enumerate(body):
        if len(row) != count + 1 or row[0] != labels[i]:
            raise ValueError("%s row %d does not match its label" % (path, i))
        values[i] = [float(v) for v in row[1:]]
    return DistanceMatrix(labels=labels, values=values)


def save_trial_report(report, path):
    _write_json({
        "protocol": report.protocol,
        "seed": report.seed,
        "per_trial_accuracy": report.per_trial_accuracy,
        "mean": report.mean,
        "std": report.std,
    }, path)


def load_trial_report(path):
    data = _read_json(path)
    try:
        return TrialReport(
            protocol=dict(data["protocol"]),
            seed=int(data["seed"]),
            per_trial_accuracy=[float(a) for a in data["per_trial_accuracy"]],
            mean=float(data["mean"]),
            std=float(data["std"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError("malformed trial report in %s: %s" % (path, exc)) from exc


def save_manifest(entries, path):
    """Record which image sets became points and which were skipped.

    Each entry carries "class" and "object" plus either "file" (the saved
    point, relative to the manifest directory) or "skipped" (the reason).
    """
    for e in entries:
        if "class" not in e or "object" not in e:
            raise ValueError("manifest entry lacks class/object: %r" % (e,))
        if ("file" in e) == ("skipped" in e):
            raise ValueError(
                "manifest entry needs exactly one of file/skipped: %r" % (e,))
    _write_json({"entries": list(entries)}, path)


def load_manifest(path):
    data = _read_json(path)
    if "entries" not in data or not isinstance(data["entries"], list):
        raise ValueError("%s is not a manifest" % path)
    return data["entries"]
