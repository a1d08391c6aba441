"""Symbolic planar regions with rational centres and radii."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple

from ..errors import InputError
from ..rational import RationalPair, format_rational

ORIGIN: RationalPair = (Fraction(0), Fraction(0))


class Region:
    def render(self) -> Dict[str, Any]:
        raise NotImplementedError


@dataclass(frozen=True)
class Empty(Region):
    def render(self) -> Dict[str, Any]:
        return {"shape": "empty"}


@dataclass(frozen=True)
class Pt(Region):
    center: RationalPair

    def render(self) -> Dict[str, Any]:
        return {"shape": "point", "center": _render_pair(self.center)}


@dataclass(frozen=True)
class _Round(Region):
    center: RationalPair
    radius: Fraction

    def __post_init__(self):
        if self.radius <= 0:
            raise InputError(f"Radius must be positive, got {self.radius}")

    def render(self) -> Dict[str, Any]:
        return {"shape": self.shape, "center": _render_pair(self.center), "radius": format_rational(self.radius)}

    @property
    def shape(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class OpenDisk(_Round):
    shape = "open-disk"


@dataclass(frozen=True)
class ClosedDisk(_Round):
    shape = "closed-disk"


@dataclass(frozen=True)
class Circle(_Round):
    shape = "circle"


@dataclass(frozen=True)
class RegionUnion(Region):
    members: Tuple[Region, ...]

    def __post_init__(self):
        if not self.members:
            raise InputError("A union needs at least one member")
        if any(isinstance(member, (RegionUnion, Empty)) for member in self.members):
            raise InputError("Union members must be flat, nonempty shapes")

    def render(self) -> Dict[str, Any]:
        return {"shape": "union", "members": [member.render() for member in self.members]}


def union(*regions: Region) -> Region:
    """Flatten nested unions and drop empty members"""
    members = []
    for region in regions:
        if isinstance(region, RegionUnion):
            members.extend(region.members)
        elif not isinstance(region, Empty):
            members.append(region)
    if not members:
        return Empty()
    if len(members) == 1:
        return members[0]
    return RegionUnion(tuple(members))


def atoms(region: Region) -> Tuple[Region, ...]:
    if isinstance(region, RegionUnion):
        return region.members
    if isinstance(region, Empty):
        return ()
    return (region,)


def _render_pair(pair: RationalPair) -> list:
    return [format_rational(pair[0]), format_rational(pair[1])]


@dataclass(frozen=True)
class Rotation:
    """Rotation about the origin by an angle with rational cosine and sine"""

    cos: Fraction
    sin: Fraction

    def __post_init__(self):
        if self.cos * self.cos + self.sin * self.sin != 1:
            raise InputError(f"({self.cos}, {self.sin}) is not on the unit circle")

    def apply(self, point: RationalPair) -> RationalPair:
        x, y = point
        return self.cos * x - self.sin * y, self.sin * x + self.cos * y


# quarter turns plus Pythagorean-triple angles
ROTATIONS: Tuple[Rotation, ...] = tuple(
    Rotation(Fraction(c), Fraction(s))
    for c, s in (
        (1, 0),
        (0, 1),
        (-1, 0),
        (0, -1),
        ("3/5", "4/5"),
        ("-12/13", "5/13"),
        ("-8/17", "-15/17"),
        ("20/29", "-21/29"),
    )
)


def rotate(region: Region, rotation: Rotation) -> Region:
    if isinstance(region, Empty):
        return region
    if isinstance(region, Pt):
        return Pt(rotation.apply(region.center))
    if isinstance(region, _Round):
        return type(region)(rotation.apply(region.center), region.radius)
    if isinstance(region, RegionUnion):
        return RegionUnion(tuple(rotate(member, rotation) for member in region.members))
    raise NotImplementedError(f"Unsupported region: {region!r}")
