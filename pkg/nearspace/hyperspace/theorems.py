from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from ..errors import NotT1
from ..proximity.kinds import ProximityKind
from ..proximity.relations import strongly_near
from ..topology import bits
from ..topology.space import FiniteSpace
from .subbase import far_miss_set, hit_set, strong_hit_set


@dataclass
class AdmissibilityReport:
    """
    Open sets for which x -> {x} fails to be a homeomorphism onto its image.

    preimage failures list V with {x : {x} in V-generator} != V, trace failures list A
    with (A-generator) restricted to singletons != {{x} : x in A}.
    """

    strong_hit_preimage: List[int] = field(default_factory=list)
    strong_hit_trace: List[int] = field(default_factory=list)
    far_miss_preimage: List[int] = field(default_factory=list)
    far_miss_trace: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.strong_hit_preimage or self.strong_hit_trace or self.far_miss_preimage or self.far_miss_trace)

    def render(self, space: FiniteSpace) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "strong_hit_preimage_failures": [space.render(V) for V in self.strong_hit_preimage],
            "strong_hit_trace_failures": [space.render(A) for A in self.strong_hit_trace],
            "far_miss_preimage_failures": [space.render(A) for A in self.far_miss_preimage],
            "far_miss_trace_failures": [space.render(A) for A in self.far_miss_trace],
        }


def _require_t1(space: FiniteSpace) -> None:
    if not space.is_t1():
        raise NotT1("The canonical injection needs closed singletons (a T1 space)")


def _singleton_trace(hyper_set: frozenset, space: FiniteSpace) -> int:
    """Points x with {x} in the hyper set"""
    return bits.from_points(x for x in range(space.n) if bits.singleton(x) in hyper_set)


def admissibility_check(space: FiniteSpace, kind: ProximityKind, far_kind: ProximityKind) -> AdmissibilityReport:
    """Verify that i(x) = {x} is continuous and open for the strongly-hit and far-miss halves"""
    _require_t1(space)
    report = AdmissibilityReport()
    for V in space.sorted_opens:
        preimage = bits.from_points(x for x in range(space.n) if strongly_near(space, kind, bits.singleton(x), V))
        if preimage != V:
            report.strong_hit_preimage.append(V)
        if _singleton_trace(strong_hit_set(space, V, kind), space) != V:
            report.strong_hit_trace.append(V)

        far_miss = far_miss_set(space, V, far_kind)
        # on a T1 space i^-1(A++) and the trace on i(X) are read off the same singletons
        if _singleton_trace(far_miss, space) != V:
            report.far_miss_preimage.append(V)
        if {E for E in far_miss if bits.is_singleton(E)} != {bits.singleton(x) for x in bits.members(V)}:
            report.far_miss_trace.append(V)
    return report


def lemma_check(space: FiniteSpace, kind: ProximityKind) -> List[Tuple[int, int]]:
    """Open pairs (A, H) with A^- inside H^ yet A not inside H; expected empty"""
    _require_t1(space)
    hits = {V: hit_set(space, V) for V in space.sorted_opens}
    strong_hits = {V: strong_hit_set(space, V, kind) for V in space.sorted_opens}
    return [
        (A, H)
        for A in space.sorted_opens
        for H in space.sorted_opens
        if hits[A] <= strong_hits[H] and not bits.is_subset(A, H)
    ]


def remark_check(space: FiniteSpace, kind: ProximityKind) -> List[int]:
    """Open sets V whose strongly-hit set differs from the plain hit set"""
    return [V for V in space.sorted_opens if strong_hit_set(space, V, kind) != hit_set(space, V)]
