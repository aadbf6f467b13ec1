# src/swarmkit/robot/kinematics.py

"""Straight-line motion and forward obstacle detection."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.spatial.distance import cdist

from swarmkit.arena.types import ArenaSpec
from swarmkit.numeric import unit_vectors
from swarmkit.types import BoolArray, FloatArray

from .types import BodySpec, RobotPose


def advance_positions(
    positions: FloatArray,
    headings: FloatArray,
    distance: float | FloatArray,
) -> FloatArray:
    """
    Move each position ``distance`` meters along its heading.

    Parameters
    ----------
    positions:
        Array of shape ``(N, 2)``.
    headings:
        Array of shape ``(N,)``.
    distance:
        Scalar or per-robot distance.

    Returns
    -------
    numpy.ndarray
        New positions of shape ``(N, 2)``.
    """
    step = np.asarray(distance, dtype=np.float64).reshape(-1, 1)
    return positions + step * unit_vectors(headings)


def integrate_motion(pose: RobotPose, linear_speed: float, dt: float) -> RobotPose:
    """
    Advance a pose by ``linear_speed * dt`` along its heading.

    The heading is unchanged. Walls and other robots are the engine's
    concern.

    Raises
    ------
    ValueError
        If ``dt`` is not positive.
    """
    if not dt > 0.0:
        raise ValueError("dt must be > 0.")

    new_position = advance_positions(
        np.asarray([pose.position], dtype=np.float64),
        np.asarray([pose.heading], dtype=np.float64),
        linear_speed * dt,
    )[0]

    return RobotPose(
        position=(new_position[0], new_position[1]),
        heading=pose.heading,
    )


def blocked_mask(
    positions: FloatArray,
    headings: FloatArray,
    arena: ArenaSpec,
    body: BodySpec,
) -> BoolArray:
    r"""
    Forward obstacle test for every robot of a swarm.

    A look-ahead point is placed ``proximity_range`` ahead of each robot. The
    robot is blocked when

    - another robot center lies in its forward half-plane within
      :math:`2 r_b + r_p` of the look-ahead point, or
    - the body would touch the wall at the look-ahead point,
      :math:`\lVert\mathbf p\rVert + r_b > R`.

    Parameters
    ----------
    positions:
        Array of shape ``(N, 2)``.
    headings:
        Array of shape ``(N,)``.

    Returns
    -------
    numpy.ndarray
        Boolean array of shape ``(N,)``.
    """
    directions = unit_vectors(headings)
    ahead_points = positions + body.proximity_range * directions

    wall = (
        np.hypot(ahead_points[:, 0], ahead_points[:, 1]) + body.body_radius
        > arena.arena_radius
    )

    if positions.shape[0] < 2:
        return wall

    reach = 2.0 * body.body_radius + body.proximity_range
    near_ahead = cdist(ahead_points, positions) < reach

    offsets = positions[None, :, :] - positions[:, None, :]
    ahead = np.einsum("ijk,ik->ij", offsets, directions) > 0.0

    hits = near_ahead & ahead
    np.fill_diagonal(hits, False)

    return wall | hits.any(axis=1)


def proximity_blocked(
    pose: RobotPose,
    others: Sequence[RobotPose],
    arena: ArenaSpec,
    body: BodySpec,
) -> bool:
    """
    True if the wall or another robot is detected ahead of ``pose``.

    See ``blocked_mask`` for the detection rule.
    """
    positions = np.asarray(
        [pose.position] + [other.position for other in others],
        dtype=np.float64,
    )
    headings = np.asarray(
        [pose.heading] + [other.heading for other in others],
        dtype=np.float64,
    )
    return bool(blocked_mask(positions, headings, arena, body)[0])
