"""Batch command line interface.

Subcommands mirror the pipeline stages: ``represent`` turns an image
dataset into subspace point files plus a manifest, ``distmat`` computes the
pairwise distance table, ``crossval`` runs repeated random-split
evaluation, and ``three`` answers which two of three image directories show
the same object.

A dataset directory is laid out as root/<class>/<object>/<view>.png (jpg
and jpeg also work).  Options resolve with command line flags first, then a
JSON config file, then built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import logging
import pathlib
import sys

from .classify import LabeledPoint, cross_validate, three_set_recognition
from .errors import (
    DecodeError,
    ImageSizeMismatch,
    LinearlyDependent,
    QuatGrassError,
    RankDeficient,
)
from .grassmann import distance_matrix
from .imagesets import ImageSet, images_from_dir, set_to_grassmann
from .storage import (
    load_distance_matrix,
    load_grassmann_point,
    load_manifest,
    save_distance_matrix,
    save_grassmann_point,
    save_manifest,
    save_trial_report,
)

logger = logging.getLogger("quatgrass.cli")

DEFAULTS = {
    "resize": (20, 20),
    "components": 9,
    "train_per_class": 5,
    "trials": 10,
    "seed": 0,
    "threads": None,
    "out": ".",
}

_POINT_SUFFIX = ".qgp.json"

# errors that disqualify one image set without aborting the whole run
_SKIPPABLE = (DecodeError, RankDeficient, ImageSizeMismatch, LinearlyDependent)


def _resolve(args, keys):
    """Merge option sources: command line beats config file beats defaults."""
    config = {}
    config_path = getattr(args, "config", None)
    if config_path:
        config = json.loads(pathlib.Path(config_path).read_text(encoding="utf-8"))
        unknown = sorted(set(config) - set(DEFAULTS))
        if unknown:
            raise ValueError("unknown config keys: %s" % ", ".join(unknown))
    resolved = {}
    for key in keys:
        value = getattr(args, key, None)
        if value is None:
            value = config.get(key, DEFAULTS[key])
        resolved[key] = value
    if "resize" in resolved:
        rows, cols = (int(v) for v in resolved["resize"])
        resolved["resize"] = (rows, cols)
    return resolved


def _load_point_records(points_dir):
    """Points plus (class, object) names, from the manifest when present."""
    points_dir = pathlib.Path(points_dir)
    manifest_path = points_dir / "manifest.json"
    records = []
    if manifest_path.is_file():
        for entry in load_manifest(manifest_path):
            if "file" not in entry:
                continue
            point = load_grassmann_point(points_dir / entry["file"])
            records.append((point, entry["class"], entry["object"]))
    else:
        for path in sorted(points_dir.glob("*" + _POINT_SUFFIX)):
            stem = path.name[:-len(_POINT_SUFFIX)]
            cls, _, obj = stem.partition("_")
            records.append((load_grassmann_point(path), cls, obj or stem))
    if not records:
        raise ValueError("no subspace points found in %s" % points_dir)
    return records


def cmd_represent(args):
    cfg = _resolve(args, ("resize", "components", "out"))
    dataset = pathlib.Path(args.dataset)
    if not dataset.is_dir():
        raise ValueError("dataset directory %s does not exist" % dataset)
    out_dir = pathlib.Path(cfg["out"])
    out_dir.mkdir(parents=True, exist_ok=True)

    entries = []
    class_dirs = sorted(d for d in dataset.iterdir() if d.is_dir())
    if not class_dirs:
        logger.warning("dataset %s contains no class directories", dataset)
    for class_dir in class_dirs:
        for object_dir in sorted(d for d in class_dir.iterdir() if d.is_dir()):
            cls, obj = class_dir.name, object_dir.name
            try:
                images = images_from_dir(object_dir)
                if not images:
                    logger.warning("%s/%s: no images, skipping", cls, obj)
                    entries.append({"class": cls, "object": obj,
                                    "skipped": "no images found"})
                    continue
                image_set = ImageSet(images, label=cls, object_id=obj)
                point = set_to_grassmann(image_set, cfg["components"],
                                         cfg["resize"])
            except _SKIPPABLE as exc:
                reason = "%s: %s" % (type(exc).__name__, exc)
                logger.warning("%s/%s skipped (%s)", cls, obj, reason)
                entries.append({"class": cls, "object": obj, "skipped": reason})
                continue
            file_name = "%s_%s%s" % (cls, obj, _POINT_SUFFIX)
            save_grassmann_point(point, out_dir / file_name)
            entries.append({"class": cls, "object": obj, "file": file_name})
            logger.info("%s/%s -> %s", cls, obj, file_name)

    save_manifest(entries, out_dir / "manifest.json")
    kept = sum(1 for e in entries if "file" in e)
    logger.info("represented %d of %d image sets", kept, len(entries))
    return 0


def cmd_distmat(args):
    cfg = _resolve(args, ("threads", "out"))
    records = _load_point_records(args.points)
    labels = ["%s_%s" % (c, o) for _, c, o in records]
    dm = distance_matrix([p for p, _, _ in records], labels=labels,
                         threads=cfg["threads"])
    out_dir = pathlib.Path(cfg["out"])
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / "distmat.csv"
    save_distance_matrix(dm, out_path)
    logger.info("wrote %d x %d distances to %s", len(labels), len(labels),
                out_path)
    return 0


def cmd_crossval(args):
    cfg = _resolve(args, ("train_per_class", "trials", "seed", "threads", "out"))
    records = _load_point_records(args.points)
    labeled = [LabeledPoint(p, c, "%s_%s" % (c, o)) for p, c, o in records]

    distances = None
    if args.distmat:
        dm = load_distance_matrix(args.distmat)
        expected = [lp.object_id for lp in labeled]
        if dm.labels != expected:
            raise ValueError(
                "distance matrix labels do not match the points in order")
        distances = dm

    report = cross_validate(
        labeled,
        train_per_class=int(cfg["train_per_class"]),
        trials=int(cfg["trials"]),
        seed=int(cfg["seed"]),
        distances=distances,
        protocol_extra={
            "components": records[0][0].subspace_dim,
            "ambient_dimension": records[0][0].dimension,
        },
        threads=cfg["threads"])

    out_dir = pathlib.Path(cfg["out"])
    out_dir.mkdir(parents=True, exist_ok=True)
    save_trial_report(report, out_dir / "report.json")
    print("accuracy mean %.2f%% std %.2f over %d trials"
          % (report.mean, report.std, len(report.per_trial_accuracy)))
    return 0


def cmd_three(args):
    cfg = _resolve(args, ("resize", "components"))
    points = []
    for name, directory in zip("ABC", (args.dir_a, args.dir_b, args.dir_c)):
        images = images_from_dir(directory)
        if not images:
            raise ValueError("directory %s for set %s has no images"
                             % (directory, name))
        points.append(set_to_grassmann(ImageSet(images, label=name),
                                       cfg["components"], cfg["resize"]))
    result = three_set_recognition(*points)
    print("same object: %s and %s (outlier %s)"
          % (result.same_pair[0], result.same_pair[1], result.outlier))
    for key in ("AB", "AC", "BC"):
        print("distance %s: %.6f" % (key, result.distances[key]))
    return 0


def build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--config", metavar="FILE",
                        help="JSON file with default option values")

    sizing = argparse.ArgumentParser(add_help=False)
    sizing.add_argument("--resize", nargs=2, type=int, metavar=("ROWS", "COLS"),
                        help="working resolution (default 20 20)")
    sizing.add_argument("--components", type=int, metavar="K",
                        help="subspace dimension (default 9)")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", metavar="DIR",
                        help="output directory (default .)")

    threaded = argparse.ArgumentParser(add_help=False)
    threaded.add_argument("--threads", type=int, metavar="N",
                          help="worker threads for distances (default auto)")

    parser = argparse.ArgumentParser(
        prog="quatgrass",
        description="color image sets as quaternionic subspaces: "
                    "represent, compare, and classify them")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("represent", parents=[shared, sizing, output],
                       help="turn a dataset of image sets into point files")
    p.add_argument("dataset", help="dataset root: <class>/<object>/<view>.png")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("distmat", parents=[shared, output, threaded],
                       help="pairwise distances between stored points")
    p.add_argument("points", help="directory holding point files")
    p.set_defaults(func=cmd_distmat)

    p = sub.add_parser("crossval", parents=[shared, output, threaded],
                       help="repeated random-split recognition accuracy")
    p.add_argument("points", help="directory holding point files")
    p.add_argument("--distmat", metavar="FILE",
                   help="reuse a distance table written by distmat")
    p.add_argument("--train-per-class", type=int, metavar="N",
                   help="training sets per class (default 5)")
    p.add_argument("--trials", type=int, metavar="N",
                   help="number of random splits (default 10)")
    p.add_argument("--seed", type=int, metavar="N",
                   help="base random seed (default 0)")
    p.set_defaults(func=cmd_crossval)

    p = sub.add_parser("three", parents=[shared, sizing],
                       help="which two of three image directories match")
    p.add_argument("dir_a")
    p.add_argument("dir_b")
    p.add_argument("dir_c")
    p.set_defaults(func=cmd_three)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (QuatGrassError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
