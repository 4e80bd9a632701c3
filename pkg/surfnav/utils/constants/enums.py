"""
Enum constants for the surfnav system.
"""
from enum import Enum


class ManeuverKind(str, Enum):
    """
    Data-collection maneuver shapes.
    """
    RECTANGLE = "rectangle"
    SERPENTINE = "serpentine"
    RANDOM = "random"


class SpeedBand(str, Enum):
    """
    Velocity ranges used while collecting data.
    """
    SLOW = "slow"
    FAST = "fast"


class PlannerKind(str, Enum):
    """
    Local planners available to the closed-loop runner.
    """
    SURFACE = "surface"
    DWA = "dwa"


class TrialOutcome(str, Enum):
    """
    Ways a navigation trial can end.
    """
    REACHED = "reached"
    STUCK = "stuck"
    COLLIDED = "collided"
    TIMEOUT = "timeout"
    FALSE_GOAL = "false-goal"


class PatchRule(str, Enum):
    """
    Rule deciding whether a large patch covers a single surface.
    """
    DOMINANT = "dominant"
    LITERAL = "literal"


class SamplingMode(str, Enum):
    """
    Patch sampling strategy for costmap assembly.
    """
    HIERARCHICAL = "hierarchical"
    UNIFORM = "uniform"


class VarianceMode(str, Enum):
    """
    How principal-axis spread is reported in labels.
    """
    VARIANCE = "variance"
    STD = "std"


class RegionShape(str, Enum):
    """
    Shapes used to paint surface regions in a scenario.
    """
    RECT = "rect"
    CIRCLE = "circle"
    BLOB = "blob"


class Localization(str, Enum):
    """
    Pose the planner resolves the goal against.
    """
    GROUND_TRUTH = "ground_truth"
    ODOMETRY = "odometry"
