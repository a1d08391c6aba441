from fractions import Fraction

import pytest

from ..errors import InputError
from .shapes import ORIGIN, ROTATIONS, Circle, ClosedDisk, Empty, OpenDisk, Pt, RegionUnion, Rotation, rotate, union


def test_union_flattens_and_drops_empty():
    """Tests the union constructor normal form"""
    # Given
    disk = ClosedDisk(ORIGIN, Fraction(1))
    circle = Circle(ORIGIN, Fraction(2))

    # Then
    assert union() == Empty()
    assert union(Empty(), disk) == disk
    assert union(union(disk, circle), Empty(), Pt(ORIGIN)) == RegionUnion((disk, circle, Pt(ORIGIN)))


def test_union_members_must_be_flat():
    """Tests that nested or empty members are refused"""
    # When/Then
    with pytest.raises(InputError):
        RegionUnion(())
    with pytest.raises(InputError):
        RegionUnion((Pt(ORIGIN), RegionUnion((Pt(ORIGIN),))))


def test_radius_must_be_positive():
    """Tests the radius invariant"""
    # When/Then
    with pytest.raises(InputError, match="Radius must be positive"):
        OpenDisk(ORIGIN, Fraction(0))


def test_open_and_closed_disks_differ():
    """Tests that equal centre and radius do not make an open disk equal a closed one"""
    # Then
    assert OpenDisk(ORIGIN, Fraction(1)) != ClosedDisk(ORIGIN, Fraction(1))


def test_render_uses_rational_strings():
    """Tests the JSON rendering of a union"""
    # When
    rendered = union(ClosedDisk(ORIGIN, Fraction(1)), Circle(ORIGIN, Fraction(11, 5))).render()

    # Then
    assert rendered == {
        "shape": "union",
        "members": [
            {"shape": "closed-disk", "center": ["0/1", "0/1"], "radius": "1/1"},
            {"shape": "circle", "center": ["0/1", "0/1"], "radius": "11/5"},
        ],
    }


def test_rotations_are_exact():
    """Tests eight distinct rotations on the unit circle"""
    # Then
    assert len(set(ROTATIONS)) == 8
    with pytest.raises(InputError):
        Rotation(Fraction(1, 2), Fraction(1, 2))


def test_rotate_keeps_shape_and_radius():
    """Tests a quarter turn"""
    # When
    rotated = rotate(OpenDisk((Fraction(1), Fraction(0)), Fraction(1, 2)), ROTATIONS[1])

    # Then
    assert rotated == OpenDisk((Fraction(0), Fraction(1)), Fraction(1, 2))
