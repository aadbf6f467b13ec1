import numpy as np
import pytest
from hypothesis import given, strategies as st

from swarmkit.arena import (
    GroundColor,
    NO_SITE,
    SiteId,
    ground_color,
    ground_readings,
    inside_arena,
    make_arena,
    site_labels,
    site_membership,
)


@pytest.fixture
def arena():
    return make_arena(50)


def test__ground_color__site_centers_and_arena_center(arena):
    assert ground_color(arena, arena.site_black_center) is GroundColor.BLACK
    assert ground_color(arena, arena.site_white_center) is GroundColor.WHITE
    assert ground_color(arena, (0.0, 0.0)) is GroundColor.GREY


def test__site_membership__inside_half_radius(arena):
    cx, cy = arena.site_black_center
    point = (cx + 0.5 * arena.site_radius, cy)

    assert site_membership(arena, point) is SiteId.BLACK


def test__site_membership__grey_floor_is_none(arena):
    assert site_membership(arena, (0.0, 1.0)) is None


def test__site_membership__boundary_is_outside(arena):
    cx, cy = arena.site_white_center
    point = (cx, cy + arena.site_radius)

    assert site_membership(arena, point) is None
    assert ground_color(arena, point) is GroundColor.GREY


def test__site_labels__vectorized(arena):
    points = np.array([
        arena.site_black_center,
        arena.site_white_center,
        (0.0, 0.0),
    ])

    np.testing.assert_array_equal(
        site_labels(arena, points), [SiteId.BLACK, SiteId.WHITE, NO_SITE]
    )
    np.testing.assert_array_equal(
        ground_readings(arena, points), [0.0, 1.0, 0.5]
    )


@given(
    st.floats(min_value=-6.45, max_value=6.45),
    st.floats(min_value=-6.45, max_value=6.45),
)
def test__membership_agrees_with_ground_color(x, y):
    arena = make_arena(50)
    site = site_membership(arena, (x, y))
    color = ground_color(arena, (x, y))

    if site is None:
        assert color is GroundColor.GREY
    else:
        assert color is site.color


def test__inside_arena__margin(arena):
    r = arena.arena_radius
    points = np.array([(r - 0.05, 0.0), (r - 0.1, 0.0)])

    np.testing.assert_array_equal(inside_arena(arena, points), [True, True])
    np.testing.assert_array_equal(
        inside_arena(arena, points, margin=0.085), [False, True]
    )
