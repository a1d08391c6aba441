"""Exact interior, closure, intersection and strong nearness on planar regions.

Distances are never taken: every comparison squares both sides, so the
verdicts are exact over the rationals.
"""

from itertools import combinations

from ..errors import UnsupportedConfiguration, UnsupportedKind
from ..proximity.kinds import INTERIOR_OVERLAP, MIXED, ProximityKind, ProximityTag
from ..rational import distance_above, distance_below, squared_distance
from .shapes import Circle, ClosedDisk, Empty, OpenDisk, Pt, Region, RegionUnion, _Round, atoms, union


def interior(region: Region) -> Region:
    if isinstance(region, (Empty, Pt, Circle)):
        return Empty()
    if isinstance(region, (OpenDisk, ClosedDisk)):
        return OpenDisk(region.center, region.radius)
    if isinstance(region, RegionUnion):
        check_separated(region)
        return union(*(interior(member) for member in region.members))
    raise NotImplementedError(f"Unsupported region: {region!r}")


def closure(region: Region) -> Region:
    if isinstance(region, (Empty, Pt, Circle, ClosedDisk)):
        return region
    if isinstance(region, OpenDisk):
        return ClosedDisk(region.center, region.radius)
    if isinstance(region, RegionUnion):
        return union(*(closure(member) for member in region.members))
    raise NotImplementedError(f"Unsupported region: {region!r}")


def check_separated(region: RegionUnion) -> None:
    """Refuse unions whose interior is not the union of member interiors.

    Every pair of members must either have disjoint closures or be nested.
    """
    for left, right in combinations(region.members, 2):
        if not intersects(closure(left), closure(right)):
            continue
        if contains(left, right) or contains(right, left):
            continue
        raise UnsupportedConfiguration(
            f"Members {left.render()} and {right.render()} overlap without nesting; "
            "the interior of their union is not supported"
        )


def contains_point(region: Region, point) -> bool:
    if isinstance(region, Empty):
        return False
    if isinstance(region, Pt):
        return region.center == point
    if isinstance(region, RegionUnion):
        return any(contains_point(member, point) for member in region.members)
    squared = squared_distance(region.center, point)
    radius_squared = region.radius * region.radius
    if isinstance(region, OpenDisk):
        return squared < radius_squared
    if isinstance(region, ClosedDisk):
        return squared <= radius_squared
    if isinstance(region, Circle):
        return squared == radius_squared
    raise NotImplementedError(f"Unsupported region: {region!r}")


def intersects(left: Region, right: Region) -> bool:
    return any(_atoms_intersect(a, b) for a in atoms(left) for b in atoms(right))


def _atoms_intersect(left: Region, right: Region) -> bool:
    if isinstance(left, Pt):
        return contains_point(right, left.center)
    if isinstance(right, Pt):
        return contains_point(left, right.center)
    if isinstance(left, Circle) and not isinstance(right, Circle):
        left, right = right, left
    squared = squared_distance(left.center, right.center)
    if isinstance(right, Circle):
        if isinstance(left, Circle):
            # |r1 - r2| <= d <= r1 + r2
            return distance_below(squared, left.radius + right.radius, strict=False) and distance_above(
                squared, abs(left.radius - right.radius), strict=False
            )
        strict = isinstance(left, OpenDisk)
        return distance_below(squared, left.radius + right.radius, strict) and distance_above(
            squared, right.radius - left.radius, strict
        )
    strict = isinstance(left, OpenDisk) or isinstance(right, OpenDisk)
    return distance_below(squared, left.radius + right.radius, strict)


def contains(outer: Region, inner: Region) -> bool:
    """Whether inner lies inside outer; for unions on the outside this is a sufficient test only"""
    inner_atoms = atoms(inner)
    if not inner_atoms:
        return True
    outer_atoms = atoms(outer)
    return all(any(_atom_contains(o, i) for o in outer_atoms) for i in inner_atoms)


def _atom_contains(outer: Region, inner: Region) -> bool:
    if isinstance(inner, Pt):
        return contains_point(outer, inner.center)
    if isinstance(outer, Pt):
        return False
    if isinstance(outer, Circle):
        return isinstance(inner, Circle) and inner == outer
    assert isinstance(outer, _Round) and isinstance(inner, _Round)
    squared = squared_distance(outer.center, inner.center)
    # the far edge of inner sits at d + r_inner, attained unless inner is open
    strict = isinstance(outer, OpenDisk) and not isinstance(inner, OpenDisk)
    return distance_below(squared, outer.radius - inner.radius, strict)


def strongly_near_region(kind: ProximityKind, left: Region, right: Region) -> bool:
    """
    Strong nearness of planar regions.

    ex1 is plain intersection. Under ex2 and ex3 a point is strongly near a region iff it lies in its interior.
    """
    if not kind.is_strong:
        raise UnsupportedKind(f"Planar strong nearness is defined for ex1, ex2 and ex3, not {kind.name}")
    if isinstance(left, Empty) or isinstance(right, Empty):
        return False
    if kind.tag == ProximityTag.INTERSECTION:
        return intersects(left, right)
    if isinstance(left, Pt) and isinstance(right, Pt):
        return left == right
    if isinstance(left, Pt):
        return contains_point(interior(right), left.center)
    if isinstance(right, Pt):
        return contains_point(interior(left), right.center)
    if kind.tag == ProximityTag.INTERIOR_OVERLAP:
        return intersects(interior(left), interior(right))
    return intersects(left, interior(right)) or intersects(interior(left), right)


def strongly_near_ex2(left: Region, right: Region) -> bool:
    return strongly_near_region(INTERIOR_OVERLAP, left, right)


def strongly_near_mixed(left: Region, right: Region) -> bool:
    return strongly_near_region(MIXED, left, right)
