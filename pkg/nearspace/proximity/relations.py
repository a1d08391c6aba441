import math
from fractions import Fraction
from typing import Optional, Union

from ..errors import PreconditionFailed, UnsupportedKind
from ..rational import exact_sqrt
from ..topology import bits
from ..topology.space import FiniteSpace
from .kinds import MetricPoints, ProximityKind, ProximityTag

Distance = Union[Fraction, float]


def squared_gap(A: int, B: int, pts: MetricPoints) -> Optional[Fraction]:
    """Smallest squared distance between members of A and B; None when either is empty"""
    if not A or not B:
        return None
    return min(pts.squared_distance(a, b) for a in bits.members(A) for b in bits.members(B))


def gap(A: int, B: int, pts: MetricPoints) -> Distance:
    """
    Gap d(A, B) between two point sets.

    Returns an exact Fraction when the minimum distance is rational, a float otherwise,
    and math.inf when A or B is empty. Nearness never goes through the float.
    """
    squared = squared_gap(A, B, pts)
    if squared is None:
        return math.inf
    root = exact_sqrt(squared)
    return root if root is not None else math.sqrt(squared)


def near(space: FiniteSpace, kind: ProximityKind, A: int, B: int) -> bool:
    """Plain nearness A δ B for the given kind; the empty set is near nothing"""
    if not A or not B:
        return False
    if kind.tag == ProximityTag.INTERSECTION:
        return bool(A & B)
    if kind.tag == ProximityTag.INTERIOR_OVERLAP:
        return bool(space.interior(A) & space.interior(B))
    if kind.tag == ProximityTag.MIXED:
        return bool(A & space.interior(B) or space.interior(A) & B)
    if kind.tag == ProximityTag.CLOSURE_LODATO:
        return bool(space.closure(A) & space.closure(B))
    if kind.tag == ProximityTag.METRIC_GAP:
        squared = squared_gap(A, B, MetricPoints.of(space))
        return squared is not None and squared <= kind.epsilon * kind.epsilon
    raise UnsupportedKind(f"Unsupported proximity: {kind.name}")


def strongly_near(space: FiniteSpace, kind: ProximityKind, A: int, B: int) -> bool:
    """
    Strong nearness for the almost proximities ex1, ex2 and ex3.

    ex1 is plain intersection, which already satisfies the singleton axioms. For ex2
    and ex3, {x} is strongly near a non-singleton B iff x lies in int B, and {x} is
    strongly near {y} iff x == y.
    """
    if not kind.is_strong:
        raise UnsupportedKind(f"{kind.name} has no strongly near reading")
    if not A or not B:
        return False
    if kind.tag == ProximityTag.INTERSECTION:
        return bool(A & B)

    a_single, b_single = bits.is_singleton(A), bits.is_singleton(B)
    if a_single and b_single:
        return A == B
    if a_single:
        return bool(A & space.interior(B))
    if b_single:
        return bool(B & space.interior(A))
    return near(space, kind, A, B)


def strong_inclusion(space: FiniteSpace, kind: ProximityKind, A: int, B: int) -> bool:
    """A << B: A is far from the complement of B"""
    return not near(space, kind, A, space.complement(B))


def ef_between(space: FiniteSpace, kind: ProximityKind, A: int, B: int) -> Optional[int]:
    """Find some C with A << C << B, searching subsets in increasing bit order"""
    if not strong_inclusion(space, kind, A, B):
        raise PreconditionFailed(
            f"{space.render(A)} is not strongly included in {space.render(B)} under {kind.name}"
        )
    for candidate in bits.all_subsets(space.n):
        if strong_inclusion(space, kind, A, candidate) and strong_inclusion(space, kind, candidate, B):
            return candidate
    return None
