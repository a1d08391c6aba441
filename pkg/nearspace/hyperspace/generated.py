from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional

from ..errors import InputError
from .subbase import Generator, HyperPoint, HyperSet, HyperSubbase, cl_points


class Verdict(Enum):
    EQUAL = "equal"
    LEFT_FINER = "leftFiner"
    RIGHT_FINER = "rightFiner"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class NonOpenWitness:
    """A generator of one side whose set is not open in the other side's topology at `point`"""

    side: str
    generator: Generator
    hyper_set: HyperSet
    point: HyperPoint

    def render(self, subbase: HyperSubbase) -> Dict[str, Any]:
        space = subbase.space
        return {
            "side": self.side,
            "generator": self.generator.describe(space),
            "set": [space.render(E) for E in sorted(self.hyper_set)],
            "point": space.render(self.point),
        }


@dataclass(frozen=True)
class Comparison:
    verdict: Verdict
    witnesses: List[NonOpenWitness]


def minimal_neighbourhood(subbase: HyperSubbase, point: HyperPoint) -> HyperSet:
    """Intersection of every subbase member containing `point`; the whole of CL(X) if none does"""
    neighbourhood = frozenset(cl_points(subbase.space))
    for hyper_set in subbase.hyper_sets:
        if point in hyper_set:
            neighbourhood &= hyper_set
    return neighbourhood


def is_open_in(subbase: HyperSubbase, hyper_set: HyperSet) -> bool:
    """Whether `hyper_set` is open in the topology the subbase generates"""
    return _first_non_open_point(subbase, hyper_set) is None


def _first_non_open_point(subbase: HyperSubbase, hyper_set: HyperSet) -> Optional[HyperPoint]:
    for point in sorted(hyper_set):
        if not minimal_neighbourhood(subbase, point) <= hyper_set:
            return point
    return None


def _first_witness(side: str, source: HyperSubbase, target: HyperSubbase) -> Optional[NonOpenWitness]:
    for generator, hyper_set in source.members:
        point = _first_non_open_point(target, hyper_set)
        if point is not None:
            return NonOpenWitness(side=side, generator=generator, hyper_set=hyper_set, point=point)
    return None


def compare(left: HyperSubbase, right: HyperSubbase) -> Comparison:
    """Decide how the topologies generated by two subbases on the same space relate"""
    if left.space != right.space:
        raise InputError("Subbases over different spaces cannot be compared")
    left_not_in_right = _first_witness("left", left, right)
    right_not_in_left = _first_witness("right", right, left)

    if left_not_in_right is None and right_not_in_left is None:
        verdict = Verdict.EQUAL
    elif left_not_in_right is None:
        verdict = Verdict.RIGHT_FINER
    elif right_not_in_left is None:
        verdict = Verdict.LEFT_FINER
    else:
        verdict = Verdict.INCOMPARABLE
    witnesses = [witness for witness in (left_not_in_right, right_not_in_left) if witness is not None]
    return Comparison(verdict=verdict, witnesses=witnesses)
