# src/swarmkit/arena/types.py

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from numbers import Real
import math

import numpy as np

from swarmkit.errors import ConfigurationError
from swarmkit.types import Point


class GroundColor(Enum):
    """
    Floor color under a robot, valued by its ground-sensor reading.
    """

    BLACK = 0.0
    GREY = 0.5
    WHITE = 1.0

    @property
    def reading(self) -> float:
        return self.value

    @property
    def site(self) -> "SiteId | None":
        """Site painted in this color, ``None`` for the grey floor."""
        if self is GroundColor.BLACK:
            return SiteId.BLACK
        if self is GroundColor.WHITE:
            return SiteId.WHITE
        return None


class SiteId(IntEnum):
    """Aggregation site label. Vectorized queries use ``-1`` for no site."""

    BLACK = 0
    WHITE = 1

    @property
    def color(self) -> GroundColor:
        return GroundColor.BLACK if self is SiteId.BLACK else GroundColor.WHITE


NO_SITE: int = -1


@dataclass(frozen=True)
class ArenaSpec:
    """
    Circular arena with two circular aggregation sites.

    The arena is centered on the origin. The two sites sit halfway between
    the center and the wall, diametrically opposed.

    Parameters
    ----------
    arena_diameter:
        Arena diameter in meters.
    site_diameter:
        Diameter of each site in meters.
    site_black_center:
        Center of the black site in meters.
    site_white_center:
        Center of the white site in meters.

    Raises
    ------
    ConfigurationError
        If a diameter is nonpositive or nonfinite, the sites do not fit
        inside the arena without overlapping, or a site center is not at
        half the arena radius from the origin, opposite the other one.
    """

    arena_diameter: float
    site_diameter: float
    site_black_center: Point
    site_white_center: Point

    def __post_init__(self) -> None:
        self.check_args()

    @property
    def arena_radius(self) -> float:
        return 0.5 * self.arena_diameter

    @property
    def site_radius(self) -> float:
        return 0.5 * self.site_diameter

    @property
    def area(self) -> float:
        return math.pi * self.arena_radius**2

    @property
    def site_centers(self) -> np.ndarray:
        """Site centers as a ``(2, 2)`` array indexed by ``SiteId``."""
        return np.array(
            [self.site_black_center, self.site_white_center],
            dtype=np.float64,
        )

    def check_args(self) -> None:
        """Validate diameters and site placement."""
        for name in ("arena_diameter", "site_diameter"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, Real):
                raise ConfigurationError(name, "must be a real number")
            if not math.isfinite(value) or value <= 0.0:
                raise ConfigurationError(name, "must be positive and finite")

        # sites centered at R/2 fit iff d_site <= R; they touch iff d_site == R
        if self.site_diameter >= self.arena_radius:
            raise ConfigurationError(
                "site_diameter",
                "must be smaller than the arena radius so sites fit "
                "inside the arena without overlapping",
            )

        half_radius = 0.5 * self.arena_radius
        tol = 1e-9 * max(1.0, self.arena_radius)

        black = np.asarray(self.site_black_center, dtype=np.float64)
        white = np.asarray(self.site_white_center, dtype=np.float64)

        for name, center in (
            ("site_black_center", black),
            ("site_white_center", white),
        ):
            if center.shape != (2,) or not np.all(np.isfinite(center)):
                raise ConfigurationError(name, "must be a finite 2D point")
            if abs(np.hypot(*center) - half_radius) > tol:
                raise ConfigurationError(
                    name, "must lie at half the arena radius from the center"
                )

        if np.hypot(*(black + white)) > tol:
            raise ConfigurationError(
                "site_white_center",
                "must be diametrically opposed to the black site",
            )
