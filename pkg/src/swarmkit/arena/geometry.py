# src/swarmkit/arena/geometry.py

"""Arena construction and floor queries."""

from __future__ import annotations

import numpy as np

from swarmkit.constants import ARENA_PRESETS
from swarmkit.errors import ConfigurationError
from swarmkit.types import ArrayLike, FloatArray, IntArray, Point

from .types import ArenaSpec, GroundColor, SiteId, NO_SITE


def make_arena(
    swarm_size: int,
    arena_diameter: float | None = None,
    site_diameter: float | None = None,
) -> ArenaSpec:
    """
    Build the arena for a swarm.

    Canonical swarm sizes take their diameters from ``ARENA_PRESETS``.
    Explicit diameters override the preset; any other swarm size needs
    both.

    Parameters
    ----------
    swarm_size:
        Number of robots ``N``.
    arena_diameter, site_diameter:
        Optional explicit diameters in meters.

    Returns
    -------
    ArenaSpec
        Arena with the black site at ``(-R/2, 0)`` and the white site at
        ``(+R/2, 0)``.

    Raises
    ------
    ConfigurationError
        If ``swarm_size`` has no preset and a diameter is missing.
    """
    preset = ARENA_PRESETS.get(swarm_size)

    if arena_diameter is None:
        if preset is None:
            raise ConfigurationError(
                "arena_diameter",
                f"no preset for swarm_size={swarm_size}; "
                "give arena_diameter and site_diameter explicitly",
            )
        arena_diameter = preset.arena_diameter

    if site_diameter is None:
        if preset is None:
            raise ConfigurationError(
                "site_diameter",
                f"no preset for swarm_size={swarm_size}; "
                "give arena_diameter and site_diameter explicitly",
            )
        site_diameter = preset.site_diameter

    offset = 0.25 * float(arena_diameter)

    return ArenaSpec(
        arena_diameter=float(arena_diameter),
        site_diameter=float(site_diameter),
        site_black_center=(-offset, 0.0),
        site_white_center=(offset, 0.0),
    )


def site_labels(arena: ArenaSpec, points: ArrayLike) -> IntArray:
    """
    Site label of each point, ``NO_SITE`` (-1) off-site.

    Parameters
    ----------
    points:
        Array of shape ``(M, 2)``.

    Returns
    -------
    numpy.ndarray
        Integer labels of shape ``(M,)``; membership is strict interior.
    """
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    centers = arena.site_centers
    r2 = arena.site_radius**2

    d2 = np.sum((pts[:, None, :] - centers[None, :, :]) ** 2, axis=2)

    labels = np.full(pts.shape[0], NO_SITE, dtype=np.int64)
    labels[d2[:, SiteId.BLACK] < r2] = SiteId.BLACK
    labels[d2[:, SiteId.WHITE] < r2] = SiteId.WHITE
    return labels


def ground_readings(arena: ArenaSpec, points: ArrayLike) -> FloatArray:
    """
    Ground-sensor readings (0.0, 0.5 or 1.0) for an array of points.
    """
    labels = site_labels(arena, points)
    readings = np.full(labels.shape, GroundColor.GREY.reading)
    readings[labels == SiteId.BLACK] = GroundColor.BLACK.reading
    readings[labels == SiteId.WHITE] = GroundColor.WHITE.reading
    return readings


def site_membership(arena: ArenaSpec, point: Point) -> SiteId | None:
    """Site strictly containing ``point``, ``None`` if on the grey floor."""
    label = int(site_labels(arena, point)[0])
    return None if label == NO_SITE else SiteId(label)


def ground_color(arena: ArenaSpec, point: Point) -> GroundColor:
    """
    Floor color at ``point``.

    Points outside the arena read grey; the wall keeps robots inside.
    """
    site = site_membership(arena, point)
    return GroundColor.GREY if site is None else site.color


def inside_arena(arena: ArenaSpec, points: ArrayLike, margin: float = 0.0):
    """True where a disc of radius ``margin`` at each point fits in the arena."""
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    return np.hypot(pts[:, 0], pts[:, 1]) <= arena.arena_radius - margin
