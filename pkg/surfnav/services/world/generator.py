"""
Procedural world generation and surface lookup.
"""
import math
from typing import Tuple

import numpy as np

from surfnav.exceptions import WorldConfigError
from surfnav.utils.constants.enums import RegionShape
from surfnav.utils.logging.logger import get_logger
from .models import Region, ScenarioConfig, SurfaceSpec, WorldModel

logger = get_logger(__name__)

# Radial harmonics used to perturb blob outlines
_BLOB_HARMONICS = 5


def gen_world(config: ScenarioConfig, seed: int) -> WorldModel:
    """
    Generate a world from a scenario description.

    Cells are painted by their centers: first the background surface, then
    each region in order, then seeded random blobs. Blob outlines are star
    shaped (radius perturbed by a few seeded harmonics), so every painted
    region is contiguous.

    Args:
        config: Scenario description
        seed: Seed for random blobs and all downstream noise

    Returns:
        The generated WorldModel

    Raises:
        WorldConfigError: If start or goal fall outside the extent or inside an obstacle
    """
    width, height = config.extent
    nx = max(1, int(math.ceil(width / config.cell_size - 1e-9)))
    ny = max(1, int(math.ceil(height / config.cell_size - 1e-9)))

    background = config.background if config.background is not None else config.surfaces[0].id
    grid = np.full((ny, nx), background, dtype=np.int32)

    xs = (np.arange(nx) + 0.5) * config.cell_size
    ys = (np.arange(ny) + 0.5) * config.cell_size
    cx, cy = np.meshgrid(xs, ys)

    rng = np.random.default_rng(seed)
    for region in config.regions:
        grid[_region_mask(region, cx, cy, rng)] = region.surface

    blobs = config.random_blobs
    if blobs.count and blobs.surfaces:
        lo, hi = blobs.radius_range
        for _ in range(blobs.count):
            region = Region(
                surface=int(rng.choice(blobs.surfaces)),
                shape=RegionShape.BLOB,
                center=(float(rng.uniform(0.0, width)), float(rng.uniform(0.0, height))),
                radius=float(rng.uniform(lo, hi)),
            )
            grid[_region_mask(region, cx, cy, rng)] = region.surface

    world = WorldModel(
        name=config.name,
        extent=(float(width), float(height)),
        cell_size=float(config.cell_size),
        surface_grid=grid,
        surfaces={s.id: s for s in config.surfaces},
        obstacles=tuple(config.obstacles),
        start_pose=tuple(float(c) for c in config.start),
        goal=tuple(float(c) for c in config.goal),
        seed=int(seed),
        physics=config.physics,
        camera=config.camera,
    )
    _validate_endpoints(world)
    logger.debug(f"Generated world '{config.name}' ({nx}x{ny} cells, seed {seed})")
    return world


def _region_mask(region: Region, cx: np.ndarray, cy: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    if region.shape == RegionShape.RECT:
        x0, y0, x1, y1 = region.bounds
        return (cx >= min(x0, x1)) & (cx < max(x0, x1)) & (cy >= min(y0, y1)) & (cy < max(y0, y1))

    dx = cx - region.center[0]
    dy = cy - region.center[1]
    dist = np.hypot(dx, dy)
    if region.shape == RegionShape.CIRCLE:
        return dist <= region.radius

    # blob: r(phi) = R * (1 + sum_k a_k cos(k phi + p_k)), sum |a_k| <= roughness < 1
    amplitudes = rng.uniform(-1.0, 1.0, _BLOB_HARMONICS)
    amplitudes *= region.roughness / max(np.sum(np.abs(amplitudes)), 1e-12)
    phases = rng.uniform(0.0, 2.0 * math.pi, _BLOB_HARMONICS)
    phi = np.arctan2(dy, dx)
    k = np.arange(2, 2 + _BLOB_HARMONICS)
    wobble = np.tensordot(amplitudes, np.cos(np.multiply.outer(k, phi) + phases[:, None, None]), axes=1)
    return dist <= region.radius * (1.0 + wobble)


def _validate_endpoints(world: WorldModel) -> None:
    sx, sy, _ = world.start_pose
    gx, gy = world.goal
    if not world.contains(sx, sy):
        raise WorldConfigError(f"Start ({sx}, {sy}) lies outside the world extent {world.extent}")
    if not world.contains(gx, gy):
        raise WorldConfigError(f"Goal ({gx}, {gy}) lies outside the world extent {world.extent}")
    for obstacle in world.obstacles:
        if math.hypot(obstacle.x - gx, obstacle.y - gy) <= obstacle.radius:
            raise WorldConfigError(
                f"Goal ({gx}, {gy}) lies inside obstacle at ({obstacle.x}, {obstacle.y}) r={obstacle.radius}"
            )
        if math.hypot(obstacle.x - sx, obstacle.y - sy) <= obstacle.radius:
            raise WorldConfigError(
                f"Start ({sx}, {sy}) lies inside obstacle at ({obstacle.x}, {obstacle.y}) r={obstacle.radius}"
            )


def cell_index(world: WorldModel, x: float, y: float) -> Tuple[int, int, bool]:
    """
    Grid cell containing a point.

    Points on a cell edge belong to the cell on their upper side
    (floor(x / cell_size)); points outside the extent clamp to the border cell.

    Returns:
        (ix, iy, clamped)
    """
    ny, nx = world.surface_grid.shape
    ix = math.floor(x / world.cell_size)
    iy = math.floor(y / world.cell_size)
    cix = min(max(ix, 0), nx - 1)
    ciy = min(max(iy, 0), ny - 1)
    return cix, ciy, (cix != ix or ciy != iy)


def surface_at(world: WorldModel, x: float, y: float) -> SurfaceSpec:
    """
    Surface under a world point.

    Out-of-extent points are clamped to the nearest border cell and a
    warning is logged.
    """
    ix, iy, clamped = cell_index(world, x, y)
    if clamped:
        logger.warning(f"surface_at({x:.3f}, {y:.3f}) outside world '{world.name}', clamped to cell ({ix}, {iy})")
    return world.surfaces[int(world.surface_grid[iy, ix])]


def surface_ids_at(world: WorldModel, xs: np.ndarray, ys: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorised surface lookup.

    Returns:
        (ids, clamped) arrays shaped like ``xs``
    """
    ny, nx = world.surface_grid.shape
    ix = np.floor(np.asarray(xs) / world.cell_size).astype(np.int64)
    iy = np.floor(np.asarray(ys) / world.cell_size).astype(np.int64)
    cix = np.clip(ix, 0, nx - 1)
    ciy = np.clip(iy, 0, ny - 1)
    return world.surface_grid[ciy, cix], (cix != ix) | (ciy != iy)
