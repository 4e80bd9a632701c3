"""
Costmap artifacts: 16-bit PGM raster plus a JSON-lines patch sidecar.
"""
import math
from pathlib import Path
from typing import Tuple

import numpy as np

from surfnav.utils.helpers.image_io import write_pgm16
from surfnav.utils.serialization import write_json_lines
from .models import SurfaceCostMap


def costmap_to_pgm_values(values: np.ndarray) -> np.ndarray:
    """Cost in [0, pi/2] to 16-bit levels (cost / (pi/2) * 65535)."""
    scaled = np.rint(np.clip(values, 0.0, math.pi / 2.0) / (math.pi / 2.0) * 65535.0)
    return scaled.astype(np.uint16)


def write_costmap(directory: Path, costmap: SurfaceCostMap, stem: str = "costmap") -> Tuple[Path, Path]:
    """
    Write ``<stem>.pgm`` and ``<stem>_patches.jsonl`` into ``directory``.

    Sidecar rectangles are in resized-image pixels; ``scale_x``/``scale_y``
    map them back to the original image.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    pgm_path = directory / f"{stem}.pgm"
    sidecar_path = directory / f"{stem}_patches.jsonl"
    write_pgm16(pgm_path, costmap_to_pgm_values(costmap.values))

    height, width = costmap.values.shape
    new_w, new_h = costmap.resized_shape
    records = [
        {
            "patch_id": index,
            "x": p.x,
            "y": p.y,
            "side": p.side,
            "cost": float(cost),
            "scale_x": width / new_w,
            "scale_y": height / new_h,
        }
        for index, (p, cost) in enumerate(zip(costmap.patches.patches, costmap.patch_costs))
    ]
    write_json_lines(sidecar_path, records)
    return pgm_path, sidecar_path
