import logging
from itertools import combinations
from typing import Iterator, List

from ..errors import SizeLimitExceeded
from . import bits
from .space import FiniteSpace

logger = logging.getLogger(__name__)

MAX_ENUMERATION_POINTS = 5
MAX_BRUTE_FORCE_POINTS = 4


def enumerate_topologies(n: int) -> Iterator[FiniteSpace]:
    """
    Yield every topology on n labelled points.

    A finite topology is fixed by its minimal neighbourhoods U(x), which must satisfy
    y in U(x) => U(y) subset of U(x). Assignments are built point by point and
    pruned as soon as that condition breaks.
    """
    if n > MAX_ENUMERATION_POINTS:
        logger.warning("Enumeration guard tripped at %d points", n)
        raise SizeLimitExceeded(f"Topology enumeration is limited to {MAX_ENUMERATION_POINTS} points, got {n}")
    if n < 1:
        raise SizeLimitExceeded("Topology enumeration needs at least one point")

    full = bits.full(n)
    assigned: List[int] = []

    def consistent(point: int, neighbourhood: int) -> bool:
        for other, other_neighbourhood in enumerate(assigned):
            if other_neighbourhood >> point & 1 and not bits.is_subset(neighbourhood, other_neighbourhood):
                return False
            if neighbourhood >> other & 1 and not bits.is_subset(other_neighbourhood, neighbourhood):
                return False
        return True

    def walk(point: int) -> Iterator[FiniteSpace]:
        if point == n:
            yield FiniteSpace(n=n, opens=_opens_from_neighbourhoods(n, assigned))
            return
        for neighbourhood in bits.subsets_of(full):
            if not neighbourhood >> point & 1 or not consistent(point, neighbourhood):
                continue
            assigned.append(neighbourhood)
            yield from walk(point + 1)
            assigned.pop()

    yield from walk(0)


def _opens_from_neighbourhoods(n: int, neighbourhoods: List[int]) -> frozenset:
    return frozenset(
        subset
        for subset in bits.all_subsets(n)
        if all(bits.is_subset(neighbourhoods[point], subset) for point in bits.members(subset))
    )


def is_topology(n: int, family: frozenset) -> bool:
    if 0 not in family or bits.full(n) not in family:
        return False
    return all(left | right in family and left & right in family for left, right in combinations(family, 2))


def brute_force_topologies(n: int) -> Iterator[FiniteSpace]:
    """Check every family of subsets of an n-set and yield those that are topologies"""
    if n > MAX_BRUTE_FORCE_POINTS:
        raise SizeLimitExceeded(f"Brute-force enumeration is limited to {MAX_BRUTE_FORCE_POINTS} points, got {n}")
    if n < 1:
        raise SizeLimitExceeded("Brute-force enumeration needs at least one point")

    subset_count = 1 << n
    checked = 0
    for selector in range(1 << subset_count):
        checked += 1
        family = frozenset(subset for subset in range(subset_count) if selector >> subset & 1)
        if is_topology(n, family):
            yield FiniteSpace(n=n, opens=family)
    logger.debug("Checked %d subset families on %d points", checked, n)


def count_topologies(n: int, brute_force: bool = False) -> int:
    source = brute_force_topologies(n) if brute_force else enumerate_topologies(n)
    return sum(1 for _ in source)
