from .types import ArenaSpec, GroundColor, SiteId, NO_SITE
from .geometry import (
    make_arena,
    ground_color,
    ground_readings,
    site_membership,
    site_labels,
    inside_arena,
)

__all__ = [
    "ArenaSpec",
    "GroundColor",
    "SiteId",
    "NO_SITE",
    "make_arena",
    "ground_color",
    "ground_readings",
    "site_membership",
    "site_labels",
    "inside_arena",
]
