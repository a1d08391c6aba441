import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..audit.axioms import audit_compatibility, audit_lodato
from ..errors import IncompatibleProximity, InputError, NotOpen, UnsupportedKind
from ..proximity.kinds import ProximityKind
from ..proximity.relations import near, strongly_near
from ..topology import bits
from ..topology.space import FiniteSpace

logger = logging.getLogger(__name__)

HyperPoint = int
HyperSet = FrozenSet[HyperPoint]

FAR_MISS_AXIOMS = ("P0", "P1", "P2", "P3", "P4")


class GeneratorFamily(Enum):
    HIT = "hit"
    MISS = "miss"
    FELL_MISS = "fell-miss"
    FAR_MISS = "far-miss"
    STRONG_HIT = "strong-hit"


@dataclass(frozen=True)
class HalfSpec:
    """One half of a hit-and-miss subbase: a generator family plus its proximity, if any"""

    family: GeneratorFamily
    proximity: Optional[ProximityKind] = None

    def __post_init__(self):
        needs_proximity = self.family in (GeneratorFamily.FAR_MISS, GeneratorFamily.STRONG_HIT)
        if needs_proximity and self.proximity is None:
            raise InputError(f"The {self.family.value} half needs a proximity")
        if not needs_proximity and self.proximity is not None:
            raise InputError(f"The {self.family.value} half takes no proximity")
        proximity = self.proximity
        if self.family == GeneratorFamily.STRONG_HIT and proximity is not None and not proximity.is_strong:
            raise UnsupportedKind(f"{proximity.name} is not an almost proximity")

    @property
    def name(self) -> str:
        if self.proximity is None:
            return self.family.value
        return f"{self.family.value}:{self.proximity.name}"


@dataclass(frozen=True)
class Generator:
    half: HalfSpec
    parameter: int

    def describe(self, space: FiniteSpace) -> str:
        return f"{self.half.name}({','.join(space.render(self.parameter))})"


@dataclass(frozen=True)
class HyperSubbase:
    space: FiniteSpace
    members: Tuple[Tuple[Generator, HyperSet], ...]

    @property
    def name(self) -> str:
        halves = dict.fromkeys(generator.half.name for generator, _ in self.members)
        return "+".join(halves)

    @property
    def hyper_sets(self) -> List[HyperSet]:
        return [hyper_set for _, hyper_set in self.members]


def cl_points(space: FiniteSpace) -> Tuple[HyperPoint, ...]:
    """Nonempty closed sets, ordered by bit value"""
    return tuple(closed for closed in space.closed_sets if closed)


def _require_open(space: FiniteSpace, subset: int) -> None:
    space.check_subset(subset)
    if not space.is_open(subset):
        raise NotOpen(f"{space.render(subset)} is not open")


def hit_set(space: FiniteSpace, V: int) -> HyperSet:
    """V^- : closed sets meeting V"""
    _require_open(space, V)
    return frozenset(E for E in cl_points(space) if E & V)


def miss_set(space: FiniteSpace, W: int) -> HyperSet:
    """W^+ : closed sets inside W"""
    _require_open(space, W)
    return frozenset(E for E in cl_points(space) if bits.is_subset(E, W))


def fell_miss_set(space: FiniteSpace, W: int) -> HyperSet:
    """Fell's miss half keeps only W with compact complement, which on a finite space is every W"""
    _require_open(space, W)
    if not space.is_compact(space.complement(W)):
        return frozenset()
    return miss_set(space, W)


@lru_cache(maxsize=256)
def require_far_miss_proximity(space: FiniteSpace, kind: ProximityKind) -> None:
    """Refuse a far-miss proximity that is not Lodato (P0-P4) or not compatible with the topology"""
    lodato = audit_lodato(space, kind, allow_large=True)
    compatibility = audit_compatibility(space, kind, allow_large=True)
    failed = tuple(axiom for axiom in FAR_MISS_AXIOMS if not lodato.verdict(axiom).holds)
    if not compatibility.verdict("compatibility").holds:
        failed += ("compatibility",)
    if failed:
        logger.warning("Refusing far-miss sets for %s on %s: %s fail", kind.name, space.fingerprint, ", ".join(failed))
        raise IncompatibleProximity(
            f"{kind.name} cannot build far-miss sets on this space ({', '.join(failed)} fail)", failed
        )


def far_miss_set(space: FiniteSpace, A: int, kind: ProximityKind) -> HyperSet:
    """A^++ : closed sets far from the complement of A"""
    _require_open(space, A)
    require_far_miss_proximity(space, kind)
    outside = space.complement(A)
    return frozenset(E for E in cl_points(space) if not near(space, kind, E, outside))


def strong_hit_set(space: FiniteSpace, V: int, kind: ProximityKind) -> HyperSet:
    """V^ : closed sets strongly near V"""
    _require_open(space, V)
    if not kind.is_strong:
        raise UnsupportedKind(f"{kind.name} is not an almost proximity")
    return frozenset(E for E in cl_points(space) if strongly_near(space, kind, E, V))


def generator_set(space: FiniteSpace, generator: Generator) -> HyperSet:
    family, kind = generator.half.family, generator.half.proximity
    if family == GeneratorFamily.HIT:
        return hit_set(space, generator.parameter)
    if family == GeneratorFamily.MISS:
        return miss_set(space, generator.parameter)
    if family == GeneratorFamily.FELL_MISS:
        return fell_miss_set(space, generator.parameter)
    if family == GeneratorFamily.FAR_MISS:
        return far_miss_set(space, generator.parameter, kind)  # pyright: ignore [reportArgumentType]
    if family == GeneratorFamily.STRONG_HIT:
        return strong_hit_set(space, generator.parameter, kind)  # pyright: ignore [reportArgumentType]
    raise NotImplementedError(f"Unsupported generator family: {family}")


def build_subbase(
    space: FiniteSpace, halves: Sequence[HalfSpec], parameters: Optional[Iterable[int]] = None
) -> HyperSubbase:
    """
    Join the given halves into one subbase.

    By default every open set of the space parameterises one generator per half;
    `parameters` restricts them, e.g. to opens whose complements lie in a chosen family.
    """
    if parameters is None:
        chosen = space.sorted_opens
    else:
        chosen = tuple(sorted(set(parameters)))
        for parameter in chosen:
            _require_open(space, parameter)
    members = []
    for half in halves:
        for parameter in chosen:
            generator = Generator(half, parameter)
            members.append((generator, generator_set(space, generator)))
    return HyperSubbase(space=space, members=tuple(members))
