"""
Pinhole camera: ground-plane projection and ray-cast rendering.

Frames: the robot frame has x forward, y left, z up with the ground at z=0.
The camera (optical) frame has x right, y down, z along the optical axis.
Pixel (u, v) has its center at integer coordinates.
"""
from typing import Optional, Sequence, Tuple

import numpy as np

from .generator import surface_ids_at
from .models import CameraModel, PixelWindow, ProjectedPixels, WorldModel
from surfnav.utils.helpers.geometry import to_world_frame

SKY_COLOR = (150, 190, 235)
OBSTACLE_COLOR = (20, 20, 20)

# Rays closer than this to parallel with the ground count as sky
_MIN_DOWNWARD = 1e-9


def camera_rotation(camera: CameraModel) -> np.ndarray:
    """
    Rotation whose columns are the camera axes expressed in the robot frame.
    """
    sp, cp = np.sin(camera.pitch), np.cos(camera.pitch)
    x_cam = np.array([0.0, -1.0, 0.0])
    y_cam = np.array([-sp, 0.0, -cp])
    z_cam = np.array([cp, 0.0, -sp])
    return np.stack([x_cam, y_cam, z_cam], axis=1)


def camera_center(camera: CameraModel) -> np.ndarray:
    return np.array([camera.forward_offset, 0.0, camera.mount_height])


def robot_to_camera(camera: CameraModel) -> np.ndarray:
    """Homogeneous 4x4 transform taking robot-frame points into the camera frame."""
    rotation = camera_rotation(camera)
    transform = np.eye(4)
    transform[:3, :3] = rotation.T
    transform[:3, 3] = -rotation.T @ camera_center(camera)
    return transform


def intrinsic_matrix(camera: CameraModel) -> np.ndarray:
    return np.array([
        [camera.fx, 0.0, camera.cx],
        [0.0, camera.fy, camera.cy],
        [0.0, 0.0, 1.0],
    ])


def project_to_pixels(points: Sequence[Tuple[float, float]], camera: CameraModel) -> ProjectedPixels:
    """
    Project robot-frame ground points (z=0) to pixel coordinates.

    Points that land outside [0, w) x [0, h) or sit behind the camera are
    clamped to the nearest valid border pixel and flagged. A point behind
    the camera is pushed to the bottom row, on the side it lies on.

    Args:
        points: (m, 2) robot-frame (x, y) ground points
        camera: Camera model

    Returns:
        ProjectedPixels with float pixel coordinates and clamp flags
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    homogeneous = np.column_stack([pts, np.zeros(len(pts)), np.ones(len(pts))])
    cam = (robot_to_camera(camera) @ homogeneous.T)[:3]

    depth = cam[2]
    behind = depth <= 1e-9
    safe_depth = np.where(behind, 1.0, depth)
    uvw = intrinsic_matrix(camera) @ (cam / safe_depth)
    u = uvw[0]
    v = uvw[1]

    # behind the camera: bottom row, column by lateral side
    u = np.where(behind, np.where(cam[0] >= 0.0, camera.width - 1.0, 0.0), u)
    v = np.where(behind, camera.height - 1.0, v)

    u_clamped = np.clip(u, 0.0, camera.width - 1.0)
    v_clamped = np.clip(v, 0.0, camera.height - 1.0)
    outside = (u < 0.0) | (u > camera.width - 1.0) | (v < 0.0) | (v > camera.height - 1.0)
    return ProjectedPixels(
        pixels=np.column_stack([u_clamped, v_clamped]),
        clamped=behind | outside,
    )


def pixel_rays(camera: CameraModel, window: Optional[PixelWindow] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Ground intersections of the rays through every pixel of a window.

    Returns:
        (points, hits): robot-frame (rows, cols, 2) ground points and a
        (rows, cols) mask of rays that reach the ground
    """
    if window is None:
        window = PixelWindow(0, 0, camera.width, camera.height)
    cols = np.arange(window.col0, window.col0 + window.cols, dtype=float)
    rows = np.arange(window.row0, window.row0 + window.rows, dtype=float)
    uu, vv = np.meshgrid(cols, rows)

    dirs_cam = np.stack([(uu - camera.cx) / camera.fx, (vv - camera.cy) / camera.fy, np.ones_like(uu)], axis=-1)
    dirs = dirs_cam @ camera_rotation(camera).T
    center = camera_center(camera)

    hits = dirs[..., 2] < -_MIN_DOWNWARD
    scale = np.where(hits, -center[2] / np.where(hits, dirs[..., 2], -1.0), 0.0)
    points = center[:2] + dirs[..., :2] * scale[..., None]
    return points, hits


def value_noise(xs: np.ndarray, ys: np.ndarray, seed: int) -> np.ndarray:
    """
    Deterministic 2D value noise in [-1, 1] on an integer lattice with
    smoothstep interpolation.
    """
    x0 = np.floor(xs)
    y0 = np.floor(ys)
    fx = xs - x0
    fy = ys - y0
    sx = fx * fx * (3.0 - 2.0 * fx)
    sy = fy * fy * (3.0 - 2.0 * fy)
    ix = x0.astype(np.int64)
    iy = y0.astype(np.int64)

    v00 = _lattice(ix, iy, seed)
    v10 = _lattice(ix + 1, iy, seed)
    v01 = _lattice(ix, iy + 1, seed)
    v11 = _lattice(ix + 1, iy + 1, seed)
    top = v00 + (v10 - v00) * sx
    bottom = v01 + (v11 - v01) * sx
    return top + (bottom - top) * sy


def _lattice(ix: np.ndarray, iy: np.ndarray, seed: int) -> np.ndarray:
    """Hash lattice coordinates to [-1, 1] (splitmix-style integer mixing)."""
    with np.errstate(over="ignore"):
        h = (ix.astype(np.uint64) * np.uint64(0x9E3779B97F4A7C15)) ^ (iy.astype(np.uint64) * np.uint64(0xC2B2AE3D27D4EB4F))
        h ^= np.uint64(seed & 0xFFFFFFFF) * np.uint64(0x165667B19E3779F9)
        h ^= h >> np.uint64(33)
        h *= np.uint64(0xFF51AFD7ED558CCD)
        h ^= h >> np.uint64(33)
        h *= np.uint64(0xC4CEB9FE1A85EC53)
        h ^= h >> np.uint64(33)
    return (h >> np.uint64(11)).astype(np.float64) / float(1 << 53) * 2.0 - 1.0


def texture_colors(world: WorldModel, wx: np.ndarray, wy: np.ndarray) -> np.ndarray:
    """
    Texture color of the ground at world points (float RGB, unclipped).
    """
    ids, _ = surface_ids_at(world, wx, wy)
    colors = np.zeros(wx.shape + (3,), dtype=float)
    for sid in np.unique(ids):
        mask = ids == sid
        texture = world.surfaces[int(sid)].texture
        base = np.asarray(texture.color, dtype=float)
        if texture.noise_amplitude > 0.0:
            noise = value_noise(wx[mask] * texture.frequency, wy[mask] * texture.frequency, world.seed * 1009 + int(sid))
            colors[mask] = base + texture.noise_amplitude * noise[:, None]
        else:
            colors[mask] = base
    return colors


def render_camera(
    world: WorldModel,
    true_pose: Tuple[float, float, float],
    camera: CameraModel,
    window: Optional[PixelWindow] = None,
) -> np.ndarray:
    """
    Ray-cast an RGB image of the ground seen from ``true_pose``.

    Each pixel ray is intersected with z=0; the hit point takes the texture
    of the surface there. Rays that never reach the ground are sky, and
    ground points inside an obstacle circle take the obstacle color.

    Args:
        world: World to render
        true_pose: Robot pose (x, y, heading) in the world
        camera: Camera model
        window: Optional sub-rectangle to render (defaults to the full image)

    Returns:
        uint8 array of shape (rows, cols, 3)
    """
    points, hits = pixel_rays(camera, window)
    image = np.empty(hits.shape + (3,), dtype=np.uint8)
    image[:] = SKY_COLOR

    if not np.any(hits):
        return image

    wx, wy = to_world_frame(true_pose, points[..., 0][hits], points[..., 1][hits])
    colors = texture_colors(world, wx, wy)

    obstacles = world.obstacle_array()
    if obstacles.shape[0]:
        inside = np.zeros(wx.shape, dtype=bool)
        for ox, oy, radius in obstacles:
            inside |= np.hypot(wx - ox, wy - oy) <= radius
        colors[inside] = OBSTACLE_COLOR

    image[hits] = np.clip(np.rint(colors), 0, 255).astype(np.uint8)
    return image


def render_top_down(world: WorldModel, pixels_per_meter: float = 10.0) -> np.ndarray:
    """
    Top-down view of surface base colors with obstacles, north up.
    """
    width = max(1, int(round(world.extent[0] * pixels_per_meter)))
    height = max(1, int(round(world.extent[1] * pixels_per_meter)))
    xs = (np.arange(width) + 0.5) / pixels_per_meter
    ys = world.extent[1] - (np.arange(height) + 0.5) / pixels_per_meter
    wx, wy = np.meshgrid(xs, ys)
    ids, _ = surface_ids_at(world, wx, wy)

    image = np.zeros((height, width, 3), dtype=np.uint8)
    for sid in np.unique(ids):
        image[ids == sid] = world.surfaces[int(sid)].texture.color
    for obstacle in world.obstacles:
        image[np.hypot(wx - obstacle.x, wy - obstacle.y) <= obstacle.radius] = OBSTACLE_COLOR
    return image
