# src/swarmkit/robot/sensing.py

"""
Presence-signal census among resting robots.

The presence signal travels in a straight line. When ``occluder_radius``
is given, a signal whose path passes through the body of a third robot
is lost, so a robot deep inside a crowd hears only the robots it can
see.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence

import numpy as np
from scipy.spatial.distance import cdist

from swarmkit.types import BoolArray, FloatArray, IntArray

from .types import RobotKind, RobotRecord


class CensusFilter(Enum):
    """
    Which broadcasting robots a census counts.

    ``RESTING_INFORMED_ONLY`` counts informed broadcasters only;
    ``RESTING_ANY`` counts every broadcaster.
    """

    RESTING_INFORMED_ONLY = "resting_informed_only"
    RESTING_ANY = "resting_any"


def occluded_links(
    positions: FloatArray,
    links: BoolArray,
    occluder_radius: float,
    reach: float,
    distances: FloatArray | None = None,
) -> BoolArray:
    """
    Links whose straight path crosses the body of another robot.

    A robot ``k`` cuts the link ``i -> j`` when its center projects
    strictly between ``i`` and ``j`` and lies closer than
    ``occluder_radius`` to the segment. Every robot is a potential
    occluder, whatever its state.

    Parameters
    ----------
    positions:
        Array of shape ``(N, 2)``.
    links:
        Boolean ``(N, N)`` array of the links to test.
    occluder_radius:
        Body radius of the robots, meters.
    reach:
        Upper bound on the length of any tested link, meters.
    distances:
        Optional precomputed ``(N, N)`` distance matrix.

    Returns
    -------
    numpy.ndarray
        Boolean ``(N, N)`` array, true for tested links that are cut.
        The relation is symmetric for symmetric ``links``.
    """
    positions = np.asarray(positions, dtype=np.float64)
    links = np.asarray(links, dtype=bool)
    if distances is None:
        distances = cdist(positions, positions)

    cut = np.zeros_like(links)

    for i in np.flatnonzero(links.any(axis=1)):
        targets = np.flatnonzero(links[i])
        near = np.flatnonzero(distances[i] < reach + occluder_radius)
        near = near[near != i]

        d = positions[targets] - positions[i]
        w = positions[near] - positions[i]
        length = np.hypot(d[:, 0], d[:, 1])

        along = (d @ w.T) / (length**2)[:, None]
        across = np.abs(
            d[:, 0, None] * w[None, :, 1] - d[:, 1, None] * w[None, :, 0]
        ) / length[:, None]

        cuts = (along > 0.0) & (along < 1.0) & (across < occluder_radius)
        cuts &= near[None, :] != targets[:, None]
        cut[i, targets] = cuts.any(axis=1)

    return cut


def census_counts(
    positions: FloatArray,
    broadcasting: BoolArray,
    kinds: IntArray,
    census_filter: CensusFilter,
    comm_range: float,
    distances: FloatArray | None = None,
    *,
    occluder_radius: float | None = None,
    observers: BoolArray | None = None,
) -> IntArray:
    """
    Number of qualifying broadcasters within ``comm_range`` of each robot.

    Parameters
    ----------
    positions:
        Array of shape ``(N, 2)``.
    broadcasting:
        Boolean array of shape ``(N,)``; true for robots in Stay.
    kinds:
        ``RobotKind`` codes of shape ``(N,)``.
    census_filter:
        Which broadcasters count.
    comm_range:
        Strict upper bound on the center distance, meters.
    distances:
        Optional precomputed ``(N, N)`` distance matrix.
    occluder_radius:
        Body radius used to drop signals cut by a third robot; ``None``
        counts every broadcaster in range.
    observers:
        Optional mask of the robots whose census is wanted; the others
        read 0.

    Returns
    -------
    numpy.ndarray
        Integer counts of shape ``(N,)``. A robot never counts itself.
    """
    if distances is None:
        distances = cdist(positions, positions)

    counted = np.asarray(broadcasting, dtype=bool).copy()
    if census_filter is CensusFilter.RESTING_INFORMED_ONLY:
        counted &= np.asarray(kinds) != RobotKind.NON_INFORMED

    hears = (distances < comm_range) & counted[None, :]
    np.fill_diagonal(hears, False)

    if observers is not None:
        hears &= np.asarray(observers, dtype=bool)[:, None]

    if occluder_radius is not None:
        hears &= ~occluded_links(
            positions, hears, occluder_radius, comm_range, distances
        )

    return hears.sum(axis=1).astype(np.int64)


def neighbor_census(
    self_id: int,
    robots: Sequence[RobotRecord],
    census_filter: CensusFilter,
    comm_range: float,
    occluder_radius: float | None = None,
) -> int:
    """
    Census seen by robot ``self_id`` among ``robots``.

    Raises
    ------
    KeyError
        If no record carries ``self_id``.
    """
    index = next(
        (i for i, record in enumerate(robots) if record.robot_id == self_id),
        None,
    )
    if index is None:
        raise KeyError(f"no robot with id {self_id}")

    positions = np.asarray([r.pose.position for r in robots], dtype=np.float64)
    broadcasting = np.asarray([r.broadcasting for r in robots], dtype=bool)
    kinds = np.asarray([int(r.kind) for r in robots], dtype=np.int64)

    observers = np.zeros(len(robots), dtype=bool)
    observers[index] = True

    counts = census_counts(
        positions, broadcasting, kinds, census_filter, comm_range,
        occluder_radius=occluder_radius, observers=observers,
    )
    return int(counts[index])
