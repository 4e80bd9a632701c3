"""
On-disk dataset layout.

A dataset is a directory holding ``index.csv`` and a ``patches/`` folder with
one binary PPM (P6) per sample. Index columns:

    sample_id, patch_file, surface_id, seed,
    label_0..label_3          s_pc1, s_pc2, |d_error|, |theta_error|
    d_error, theta_error      signed odometry errors
    vel_v, vel_w              space-separated command history, oldest first

Floats are written with ``repr`` so reruns are byte-identical.
"""
import csv
from pathlib import Path
from typing import Iterator, List, Sequence

import numpy as np

from surfnav.exceptions import InsufficientDataError
from surfnav.utils.helpers.image_io import read_netpbm, write_ppm
from surfnav.utils.logging.logger import get_logger
from .models import Sample

logger = get_logger(__name__)

INDEX_FILE = "index.csv"
PATCH_DIR = "patches"
INDEX_COLUMNS = [
    "sample_id", "patch_file", "surface_id", "seed",
    "label_0", "label_1", "label_2", "label_3",
    "d_error", "theta_error", "vel_v", "vel_w",
]


def _floats(values: Sequence[float]) -> str:
    return " ".join(repr(float(v)) for v in values)


def save_dataset(samples: Sequence[Sample], directory: Path) -> Path:
    """
    Write samples to ``directory`` (created if missing).

    Returns:
        Path of the index file
    """
    directory = Path(directory)
    (directory / PATCH_DIR).mkdir(parents=True, exist_ok=True)
    index_path = directory / INDEX_FILE
    with open(index_path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(INDEX_COLUMNS)
        for sample in samples:
            patch_file = f"{PATCH_DIR}/sample_{sample.sample_id:06d}.ppm"
            write_ppm(directory / patch_file, sample.patch)
            writer.writerow([
                sample.sample_id,
                patch_file,
                sample.surface_id,
                sample.seed,
                *[repr(float(x)) for x in sample.label],
                repr(float(sample.d_error_signed)),
                repr(float(sample.theta_error_signed)),
                _floats(sample.vel_hist[0]),
                _floats(sample.vel_hist[1]),
            ])
    logger.info(f"wrote {len(samples)} samples to {directory}")
    return index_path


def iter_dataset(directory: Path) -> Iterator[Sample]:
    """Stream samples in index order, reading each patch lazily."""
    directory = Path(directory)
    index_path = directory / INDEX_FILE
    if not index_path.exists():
        raise InsufficientDataError(f"no dataset index at {index_path}")
    with open(index_path, newline="") as handle:
        for row in csv.DictReader(handle):
            yield Sample(
                sample_id=int(row["sample_id"]),
                patch=read_netpbm(directory / row["patch_file"]),
                vel_hist=np.array([
                    [float(x) for x in row["vel_v"].split()],
                    [float(x) for x in row["vel_w"].split()],
                ]),
                label=np.array([float(row[f"label_{i}"]) for i in range(4)]),
                surface_id=int(row["surface_id"]),
                seed=int(row["seed"]),
                d_error_signed=float(row["d_error"]),
                theta_error_signed=float(row["theta_error"]),
            )


def load_dataset(directory: Path) -> List[Sample]:
    return list(iter_dataset(directory))


def shuffle_samples(samples: Sequence[Sample], seed: int) -> List[Sample]:
    """Seeded, reproducible permutation of a sample list."""
    order = np.random.default_rng(seed).permutation(len(samples))
    return [samples[i] for i in order]


def surface_counts(samples: Sequence[Sample]) -> dict:
    """Number of samples per ground-truth surface id."""
    counts = {}
    for sample in samples:
        counts[sample.surface_id] = counts.get(sample.surface_id, 0) + 1
    return dict(sorted(counts.items()))
