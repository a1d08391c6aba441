import hashlib
import string
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..errors import InputError, MissingEmptyOrFull, NotClosedUnderIntersection, NotClosedUnderUnion
from . import bits

Coordinates = Tuple[Tuple[Fraction, Fraction], ...]


def default_labels(n: int) -> Tuple[str, ...]:
    if n <= len(string.ascii_lowercase):
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"p{i}" for i in range(n))


@dataclass(frozen=True)
class FiniteSpace:
    """
    A finite topological space on the points 0..n-1.

    Subsets are integers used as bit-vectors. Every finite space is an Alexandrov
    space, so closure and interior are read off the minimal open neighbourhoods.
    """

    n: int
    opens: FrozenSet[int]
    labels: Tuple[str, ...] = field(default=())
    coordinates: Optional[Coordinates] = None

    def __post_init__(self):
        if self.n < 1:
            raise InputError("A space needs at least one point")
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.n))
        if len(self.labels) != self.n or len(set(self.labels)) != self.n:
            raise InputError(f"Expected {self.n} distinct point labels, got {list(self.labels)}")
        if self.coordinates is not None and len(self.coordinates) != self.n:
            raise InputError(f"Expected coordinates for {self.n} points, got {len(self.coordinates)}")
        _validate_topology(self.n, self.opens)

    @classmethod
    def discrete(cls, n: int) -> "FiniteSpace":
        return cls(n=n, opens=frozenset(bits.all_subsets(n)))

    @classmethod
    def indiscrete(cls, n: int) -> "FiniteSpace":
        return cls(n=n, opens=frozenset({0, bits.full(n)}))

    @property
    def full(self) -> int:
        return bits.full(self.n)

    @cached_property
    def min_nbhd(self) -> Tuple[int, ...]:
        """Smallest open set containing each point"""
        neighbourhoods = []
        for point in range(self.n):
            smallest = self.full
            for open_set in self.opens:
                if open_set >> point & 1:
                    smallest &= open_set
            neighbourhoods.append(smallest)
        return tuple(neighbourhoods)

    @cached_property
    def sorted_opens(self) -> Tuple[int, ...]:
        return tuple(sorted(self.opens))

    @cached_property
    def closed_sets(self) -> Tuple[int, ...]:
        return tuple(sorted(self.full & ~open_set for open_set in self.opens))

    def complement(self, subset: int) -> int:
        return self.full & ~subset

    def closure(self, subset: int) -> int:
        result = 0
        for point, neighbourhood in enumerate(self.min_nbhd):
            if neighbourhood & subset:
                result |= 1 << point
        return result

    def interior(self, subset: int) -> int:
        result = 0
        for point, neighbourhood in enumerate(self.min_nbhd):
            if bits.is_subset(neighbourhood, subset):
                result |= 1 << point
        return result

    def is_open(self, subset: int) -> bool:
        return subset in self.opens

    def is_closed(self, subset: int) -> bool:
        return self.complement(subset) in self.opens

    def is_t1(self) -> bool:
        return all(self.is_closed(bits.singleton(point)) for point in range(self.n))

    def is_compact(self, subset: int) -> bool:
        # every subset of a finite space is compact
        return bits.is_subset(subset, self.full)

    def specialization(self) -> FrozenSet[Tuple[int, int]]:
        """Pairs (x, y) with x in the closure of {y}"""
        return frozenset(
            (x, y) for y in range(self.n) for x in bits.members(self.closure(bits.singleton(y)))
        )

    def check_subset(self, subset: int) -> int:
        if subset < 0 or not bits.is_subset(subset, self.full):
            raise InputError(f"Subset {subset:#b} does not fit in {self.n} points")
        return subset

    def subset_of(self, labels: Iterable[str]) -> int:
        index = {label: point for point, label in enumerate(self.labels)}
        try:
            return bits.from_points(index[label] for label in labels)
        except KeyError as e:
            raise InputError(f"Unknown point label {e.args[0]!r}") from e

    def render(self, subset: int) -> List[str]:
        return [self.labels[point] for point in bits.members(subset)]

    @cached_property
    def fingerprint(self) -> str:
        payload = f"{self.n}:" + ",".join(f"{open_set:x}" for open_set in self.sorted_opens)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def __repr__(self):
        return f"<FiniteSpace(n={self.n}, opens={[self.render(o) for o in self.sorted_opens]})>"


def _validate_topology(n: int, opens: FrozenSet[int]) -> None:
    full = bits.full(n)
    for open_set in opens:
        if open_set < 0 or not bits.is_subset(open_set, full):
            raise InputError(f"Open set {open_set:#b} does not fit in {n} points")

    ordered = sorted(opens)
    for left, right in combinations(ordered, 2):
        if left | right not in opens:
            raise NotClosedUnderUnion(left, right)
    for left, right in combinations(ordered, 2):
        if left & right not in opens:
            raise NotClosedUnderIntersection(left, right)
    if 0 not in opens or full not in opens:
        raise MissingEmptyOrFull("The empty set and the whole space must both be open")


def build_space(
    n: int,
    opens: Iterable[int],
    labels: Optional[Sequence[str]] = None,
    coordinates: Optional[Coordinates] = None,
) -> FiniteSpace:
    """Validate an open family and return the space it defines"""
    return FiniteSpace(n=n, opens=frozenset(opens), labels=tuple(labels or ()), coordinates=coordinates)
