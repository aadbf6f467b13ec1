from .types import RobotKind, RobotPose, BodySpec, RobotRecord
from .kinematics import (
    advance_positions,
    integrate_motion,
    blocked_mask,
    proximity_blocked,
)
from .sensing import CensusFilter, census_counts, neighbor_census, occluded_links

__all__ = [
    "RobotKind",
    "RobotPose",
    "BodySpec",
    "RobotRecord",
    "advance_positions",
    "integrate_motion",
    "blocked_mask",
    "proximity_blocked",
    "CensusFilter",
    "census_counts",
    "neighbor_census",
    "occluded_links",
]
