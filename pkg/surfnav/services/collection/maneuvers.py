"""
Data-collection maneuvers covering the velocity box.
"""
import math
from typing import List, Tuple

import numpy as np

from surfnav.utils.constants.enums import ManeuverKind, SpeedBand
from .models import ManeuverPlan

# Velocity-box grid resolution used by the random maneuver
_V_BINS = 10
_W_BINS = 20

_RECT_SIDE = 2.0  # m
_SERPENTINE_PERIOD = 6.0  # s
_SERPENTINE_STEP = 0.2  # s


def band_limits(speed_band: SpeedBand, v_max: float, w_max: float) -> Tuple[float, float]:
    """Upper bounds (v, |w|) for a speed band."""
    if SpeedBand(speed_band) == SpeedBand.SLOW:
        return v_max / 2.0, w_max / 2.0
    return v_max, w_max


def generate_maneuver(
    kind: ManeuverKind,
    speed_band: SpeedBand,
    seed: int,
    v_max: float = 0.6,
    w_max: float = 1.0,
    duration: float = 60.0,
) -> ManeuverPlan:
    """
    Build a maneuver plan inside the velocity box of a speed band.

    rectangle: straight legs joined by 90 degree turns, cycling through speed
    and turn-rate levels. serpentine: sinusoidal w at piecewise-constant v.
    random: one jittered draw per cell of a 10 x 20 grid over the band's box,
    visited in seeded random order.

    Args:
        kind: Maneuver shape
        speed_band: slow (half limits) or fast (full limits)
        seed: Seed for random draws
        v_max: Linear velocity limit (m/s)
        w_max: Angular velocity limit (rad/s)
        duration: Target plan length (s)

    Returns:
        ManeuverPlan whose commands lie inside the band's box
    """
    kind = ManeuverKind(kind)
    speed_band = SpeedBand(speed_band)
    v_band, w_band = band_limits(speed_band, v_max, w_max)
    rng = np.random.default_rng([seed & 0xFFFFFFFF, _kind_index(kind), _band_index(speed_band)])

    if kind == ManeuverKind.RECTANGLE:
        commands = _rectangle(v_band, w_band, duration)
    elif kind == ManeuverKind.SERPENTINE:
        commands = _serpentine(v_band, w_band, duration)
    else:
        commands = _random(v_band, w_band, duration, rng)

    clipped = tuple(
        (float(min(max(v, 0.0), v_band)), float(min(max(w, -w_band), w_band)), float(hold))
        for v, w, hold in commands
    )
    return ManeuverPlan(kind=kind, speed_band=speed_band, duration=float(duration), commands=clipped)


def _kind_index(kind: ManeuverKind) -> int:
    return list(ManeuverKind).index(kind)


def _band_index(band: SpeedBand) -> int:
    return list(SpeedBand).index(band)


def _rectangle(v_band: float, w_band: float, duration: float) -> List[Tuple[float, float, float]]:
    speed_levels = v_band * np.array([0.25, 0.5, 0.75, 1.0])
    turn_levels = w_band * np.array([0.4, 0.7, 1.0])
    commands = []
    elapsed = 0.0
    leg = 0
    while elapsed < duration:
        v = float(speed_levels[leg % len(speed_levels)])
        hold = _RECT_SIDE / v
        commands.append((v, 0.0, hold))
        elapsed += hold

        # alternate turn direction every lap so the robot stays near its start
        direction = 1.0 if (leg // 4) % 2 == 0 else -1.0
        w = direction * float(turn_levels[leg % len(turn_levels)])
        turn_hold = (math.pi / 2.0) / abs(w)
        commands.append((0.5 * v, w, turn_hold))
        elapsed += turn_hold
        leg += 1
    return commands


def _serpentine(v_band: float, w_band: float, duration: float) -> List[Tuple[float, float, float]]:
    speed_levels = v_band * np.array([0.3, 0.6, 0.9])
    steps = max(1, int(round(duration / _SERPENTINE_STEP)))
    segment = max(1, steps // len(speed_levels))
    commands = []
    for k in range(steps):
        t_mid = (k + 0.5) * _SERPENTINE_STEP
        v = float(speed_levels[min(k // segment, len(speed_levels) - 1)])
        w = 0.9 * w_band * math.sin(2.0 * math.pi * t_mid / _SERPENTINE_PERIOD)
        commands.append((v, w, _SERPENTINE_STEP))
    return commands


def _random(v_band: float, w_band: float, duration: float, rng: np.random.Generator) -> List[Tuple[float, float, float]]:
    cells = [(i, j) for i in range(_V_BINS) for j in range(_W_BINS)]
    order = rng.permutation(len(cells))
    hold = duration / len(cells)
    commands = []
    for idx in order:
        i, j = cells[idx]
        v = (i + rng.uniform(0.05, 0.95)) / _V_BINS * v_band
        w = -w_band + (j + rng.uniform(0.05, 0.95)) / _W_BINS * 2.0 * w_band
        commands.append((v, w, hold))
    return commands


def all_maneuvers(seed: int, v_max: float, w_max: float, duration: float, kinds=None, bands=None) -> List[ManeuverPlan]:
    """The (kind, band) plans of one collection run, slow band first."""
    kinds = list(kinds) if kinds is not None else list(ManeuverKind)
    bands = list(bands) if bands is not None else list(SpeedBand)
    return [
        generate_maneuver(kind, band, seed, v_max=v_max, w_max=w_max, duration=duration)
        for band in bands
        for kind in kinds
    ]


def velocity_grid_coverage(plans: List[ManeuverPlan], v_max: float, w_max: float) -> float:
    """Fraction of the 10 x 20 velocity-box grid cells visited by any command."""
    visited = np.zeros((_V_BINS, _W_BINS), dtype=bool)
    for plan in plans:
        cmds = plan.command_array()
        if cmds.size == 0:
            continue
        i = np.clip(np.floor(cmds[:, 0] / v_max * _V_BINS).astype(int), 0, _V_BINS - 1)
        j = np.clip(np.floor((cmds[:, 1] + w_max) / (2.0 * w_max) * _W_BINS).astype(int), 0, _W_BINS - 1)
        visited[i, j] = True
    return float(visited.mean())
