"""
Planner domain types.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class VelocityCandidate:
    """One (v, w) pair of the search space with its objective terms."""
    v: float
    w: float
    rollout: np.ndarray  # (s_num + 1, 2) robot frame
    head: float
    dist: float
    vel: float
    sur: float
    admissible: bool
    reachable: bool = True
    pixels: Optional[np.ndarray] = None  # (s_num + 1, 2) image coordinates

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "w": self.w,
            "head": self.head,
            "dist": self.dist,
            "vel": self.vel,
            "sur": self.sur,
            "admissible": self.admissible,
            "reachable": self.reachable,
        }


@dataclass
class SearchSpace:
    """
    Velocity grid laid over the dynamic window, with per-candidate rollouts.

    Every grid point lies inside the (clipped) dynamic window, so the
    reachable set is the whole grid and ``admissible`` selects V'_r.
    """
    vs: np.ndarray  # (m,)
    ws: np.ndarray  # (m,)
    rollouts: np.ndarray  # (m, s_num + 1, 2)
    clearance: np.ndarray  # (m,) arc length to first contact, inf if none
    admissible: np.ndarray  # (m,) bool
    sur: np.ndarray  # (m,) summed surface cost, zeros without a costmap
    window: Tuple[float, float, float, float]  # (v_lo, v_hi, w_lo, w_hi)
    tau: float = 1.0
    c_half: float = 0.0
    pixels: Optional[np.ndarray] = None  # (m, s_num + 1, 2) image coordinates, only with a costmap

    def __len__(self) -> int:
        return int(self.vs.shape[0])

    @property
    def feasible(self) -> np.ndarray:
        """Indices of V'_r."""
        return np.flatnonzero(self.admissible)

    def contains(self, v: float, w: float, tol: float = 1e-12) -> bool:
        v_lo, v_hi, w_lo, w_hi = self.window
        return v_lo - tol <= v <= v_hi + tol and w_lo - tol <= w <= w_hi + tol


@dataclass
class PlanResult:
    """Command chosen for one control tick."""
    v: float
    w: float
    stopped: bool
    space: SearchSpace
    index: int = -1
    head: np.ndarray = field(default_factory=lambda: np.zeros(0))
    dist: np.ndarray = field(default_factory=lambda: np.zeros(0))
    vel: np.ndarray = field(default_factory=lambda: np.zeros(0))
    objective: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def command(self) -> Tuple[float, float]:
        return self.v, self.w

    def candidates(self) -> List[VelocityCandidate]:
        """Scored candidates of V'_r in grid order."""
        out = []
        for j, i in enumerate(self.space.feasible):
            out.append(VelocityCandidate(
                v=float(self.space.vs[i]),
                w=float(self.space.ws[i]),
                rollout=self.space.rollouts[i],
                head=float(self.head[j]),
                dist=float(self.dist[j]),
                vel=float(self.vel[j]),
                sur=float(self.space.sur[i]),
                admissible=True,
                reachable=self.space.contains(float(self.space.vs[i]), float(self.space.ws[i])),
                pixels=None if self.space.pixels is None else self.space.pixels[i],
            ))
        return out
