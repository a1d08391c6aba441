"""Integer-backed subsets: bit i set means point i is a member."""

from typing import Iterable, Iterator, List


def full(n: int) -> int:
    return (1 << n) - 1


def singleton(point: int) -> int:
    return 1 << point


def from_points(points: Iterable[int]) -> int:
    result = 0
    for point in points:
        result |= 1 << point
    return result


def members(subset: int) -> Iterator[int]:
    """Yield the point ids of a subset in increasing order"""
    point = 0
    while subset:
        if subset & 1:
            yield point
        subset >>= 1
        point += 1


def to_points(subset: int) -> List[int]:
    return list(members(subset))


def is_singleton(subset: int) -> bool:
    return subset != 0 and subset & (subset - 1) == 0


def is_subset(inner: int, outer: int) -> bool:
    return inner & ~outer == 0


def all_subsets(n: int) -> range:
    return range(1 << n)


def subsets_of(subset: int) -> Iterator[int]:
    """Yield every subset of `subset`, the empty set first"""
    sub = 0
    while True:
        yield sub
        if sub == subset:
            return
        sub = (sub - subset) & subset
