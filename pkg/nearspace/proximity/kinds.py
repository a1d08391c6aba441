from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from ..errors import InputError, MissingCoordinates
from ..rational import RationalPair, format_rational, squared_distance
from ..topology.space import FiniteSpace


class ProximityTag(Enum):
    INTERSECTION = "ex1"
    INTERIOR_OVERLAP = "ex2"
    MIXED = "ex3"
    METRIC_GAP = "metric"
    CLOSURE_LODATO = "lodato"


STRONG_TAGS = frozenset({ProximityTag.INTERSECTION, ProximityTag.INTERIOR_OVERLAP, ProximityTag.MIXED})


@dataclass(frozen=True)
class ProximityKind:
    tag: ProximityTag
    epsilon: Fraction = Fraction(0)

    def __post_init__(self):
        if self.epsilon < 0:
            raise InputError(f"Metric tolerance must be non-negative, got {self.epsilon}")
        if self.tag != ProximityTag.METRIC_GAP and self.epsilon != 0:
            raise InputError(f"Only the metric proximity takes a tolerance, not {self.tag.value}")

    @property
    def is_strong(self) -> bool:
        """Whether the kind has a strongly near (almost proximity) reading"""
        return self.tag in STRONG_TAGS

    @property
    def name(self) -> str:
        if self.tag == ProximityTag.METRIC_GAP:
            return f"metric:{format_rational(self.epsilon)}"
        return self.tag.value

    def __str__(self):
        return self.name


INTERSECTION = ProximityKind(ProximityTag.INTERSECTION)
INTERIOR_OVERLAP = ProximityKind(ProximityTag.INTERIOR_OVERLAP)
MIXED = ProximityKind(ProximityTag.MIXED)
CLOSURE_LODATO = ProximityKind(ProximityTag.CLOSURE_LODATO)
STRONG_KINDS = (INTERSECTION, INTERIOR_OVERLAP, MIXED)


def metric_gap(epsilon: Fraction = Fraction(0)) -> ProximityKind:
    return ProximityKind(ProximityTag.METRIC_GAP, epsilon)


@dataclass(frozen=True)
class MetricPoints:
    """Planar embedding of a space's points under the Euclidean metric"""

    coordinates: Tuple[RationalPair, ...]

    @classmethod
    def of(cls, space: FiniteSpace) -> "MetricPoints":
        if space.coordinates is None:
            raise MissingCoordinates("The metric proximity needs point coordinates on the space")
        return cls(space.coordinates)

    def squared_distance(self, x: int, y: int) -> Fraction:
        return squared_distance(self.coordinates[x], self.coordinates[y])
