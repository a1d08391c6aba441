import logging
from typing import Callable, Dict, Iterable, Iterator, List, Optional

from ..errors import SizeLimitExceeded, UnsupportedKind
from ..proximity.kinds import ProximityKind
from ..proximity.relations import near, strongly_near
from ..topology import bits
from ..topology.space import FiniteSpace
from .report import AuditReport, AxiomStatus, AxiomVerdict

logger = logging.getLogger(__name__)

Witness = Dict[str, int]
Relation = Callable[[int, int], bool]

MAX_AUDIT_POINTS = 4
MAX_LARGE_AUDIT_POINTS = 5


def guard_size(space: FiniteSpace, allow_large: bool = False) -> None:
    """Pairs cost 4^n and triples 8^n: four points always, five only on request"""
    limit = MAX_LARGE_AUDIT_POINTS if allow_large else MAX_AUDIT_POINTS
    if space.n > limit:
        hint = "" if allow_large or space.n > MAX_LARGE_AUDIT_POINTS else " (pass allow_large for five points)"
        logger.warning("Audit guard tripped on %s (%d points)", space.fingerprint, space.n)
        raise SizeLimitExceeded(f"Audits are limited to {limit} points, got {space.n}{hint}")


def _table(space: FiniteSpace, relation: Relation) -> List[List[bool]]:
    subsets = bits.all_subsets(space.n)
    return [[relation(left, right) for right in subsets] for left in subsets]


def _verdict(axiom: str, violations: Iterable[Witness], informational: bool = False) -> AxiomVerdict:
    witness = next(iter(violations), None)
    status = AxiomStatus.HOLDS if witness is None else AxiomStatus.FAILS
    logger.debug("%s %s%s", axiom, status.value, f" with {witness}" if witness else "")
    return AxiomVerdict(axiom=axiom, status=status, witness=witness, informational=informational)


def _pairs(n: int) -> Iterator[tuple]:
    for left in bits.all_subsets(n):
        for right in bits.all_subsets(n):
            yield left, right


def _triples(n: int) -> Iterator[tuple]:
    for first, second in _pairs(n):
        for third in bits.all_subsets(n):
            yield first, second, third


def _points(n: int) -> Iterator[tuple]:
    for x in range(n):
        for y in range(n):
            yield bits.singleton(x), bits.singleton(y)


def audit_lodato(space: FiniteSpace, kind: ProximityKind, allow_large: bool = False) -> AuditReport:
    """Check P0-P5 of a Lodato proximity over every subset pair, triple and point pair"""
    guard_size(space, allow_large)
    n = space.n
    rel = _table(space, lambda left, right: near(space, kind, left, right))
    singletons = [bits.singleton(point) for point in range(n)]

    def p4_violations() -> Iterator[Witness]:
        for A, B, C in _triples(n):
            if rel[A][B] and not rel[A][C] and all(rel[singletons[b]][C] for b in bits.members(B)):
                yield {"A": A, "B": B, "C": C}

    verdicts = [
        _verdict("P0", ({"A": A, "B": B} for A, B in _pairs(n) if rel[A][B] and not rel[B][A])),
        _verdict("P1", ({"A": A, "B": B} for A, B in _pairs(n) if rel[A][B] and not (A and B))),
        _verdict("P2", ({"A": A, "B": B} for A, B in _pairs(n) if A & B and not rel[A][B])),
        _verdict(
            "P3",
            ({"A": A, "B": B, "C": C} for A, B, C in _triples(n) if rel[A][B | C] != (rel[A][B] or rel[A][C])),
        ),
        _verdict("P4", p4_violations()),
        _verdict("P5", ({"x": x, "y": y} for x, y in _points(n) if rel[x][y] and x != y)),
    ]
    basic_failure = next((verdict for verdict in verdicts[:4] if not verdict.holds), None)
    verdicts.append(
        AxiomVerdict(
            axiom="basic",
            status=AxiomStatus.HOLDS if basic_failure is None else AxiomStatus.FAILS,
            witness=None if basic_failure is None else basic_failure.witness,
            informational=True,
        )
    )
    return AuditReport(space=space.fingerprint, kind=kind.name, verdicts=verdicts)


def audit_ef(space: FiniteSpace, kind: ProximityKind, allow_large: bool = False) -> AuditReport:
    """Check that every far pair A, B is separated by some E: A far E and X minus E far B"""
    guard_size(space, allow_large)
    n = space.n
    rel = _table(space, lambda left, right: near(space, kind, left, right))

    def separated(A: int, B: int) -> bool:
        return any(not rel[A][E] and not rel[space.complement(E)][B] for E in bits.all_subsets(n))

    violations = ({"A": A, "B": B} for A, B in _pairs(n) if not rel[A][B] and not separated(A, B))
    return AuditReport(space=space.fingerprint, kind=kind.name, verdicts=[_verdict("EF", violations)])


def audit_almost(space: FiniteSpace, kind: ProximityKind, allow_large: bool = False) -> AuditReport:
    """
    Check N0-N6 of an almost proximity.

    N0's "X strongly near A" clause ranges over nonempty A only. N3 is checked in the
    printed direction; its converse is reported as an informational verdict.
    """
    if not kind.is_strong:
        raise UnsupportedKind(f"{kind.name} is not an almost proximity")
    guard_size(space, allow_large)
    n, full = space.n, space.full
    rel = _table(space, lambda left, right: strongly_near(space, kind, left, right))
    interior = [space.interior(subset) for subset in bits.all_subsets(n)]

    def n0_violations() -> Iterator[Witness]:
        for A in bits.all_subsets(n):
            if rel[0][A]:
                yield {"A": A}
        for A in bits.all_subsets(n):
            if A and not rel[full][A]:
                yield {"A": A}

    def n3_triples() -> Iterator[tuple]:
        for A, B, C in _triples(n):
            if interior[B] and interior[C]:
                yield A, B, C

    def n5_violations() -> Iterator[Witness]:
        for x in range(n):
            for A in bits.all_subsets(n):
                if interior[A] >> x & 1 and not rel[bits.singleton(x)][A]:
                    yield {"x": bits.singleton(x), "A": A}

    verdicts = [
        _verdict("N0", n0_violations()),
        _verdict("N1", ({"A": A, "B": B} for A, B in _pairs(n) if rel[A][B] != rel[B][A])),
        _verdict("N2", ({"A": A, "B": B} for A, B in _pairs(n) if rel[A][B] and not A & B)),
        _verdict(
            "N3",
            ({"A": A, "B": B, "C": C} for A, B, C in n3_triples() if (rel[A][B] or rel[A][C]) and not rel[A][B | C]),
        ),
        _verdict(
            "N3-converse",
            ({"A": A, "B": B, "C": C} for A, B, C in n3_triples() if rel[A][B | C] and not (rel[A][B] or rel[A][C])),
            informational=True,
        ),
        _verdict("N4", ({"A": A, "B": B} for A, B in _pairs(n) if interior[A] & interior[B] and not rel[A][B])),
        _verdict("N5", n5_violations()),
        _verdict("N6", ({"x": x, "y": y} for x, y in _points(n) if rel[x][y] != (x == y))),
    ]
    return AuditReport(space=space.fingerprint, kind=kind.name, verdicts=verdicts)


def audit_compatibility(space: FiniteSpace, kind: ProximityKind, allow_large: bool = False) -> AuditReport:
    """Check that cl A = {x : {x} near A} for every A"""
    guard_size(space, allow_large)

    def induced_closure(A: int) -> int:
        return bits.from_points(x for x in range(space.n) if near(space, kind, bits.singleton(x), A))

    violations = ({"A": A} for A in bits.all_subsets(space.n) if induced_closure(A) != space.closure(A))
    return AuditReport(space=space.fingerprint, kind=kind.name, verdicts=[_verdict("compatibility", violations)])


def audit_kuratowski(space: FiniteSpace, allow_large: bool = False) -> AuditReport:
    """Check the Kuratowski closure axioms K1-K4"""
    guard_size(space, allow_large)
    n = space.n
    closure = [space.closure(subset) for subset in bits.all_subsets(n)]

    verdicts = [
        _verdict("K1", [{"A": 0}] if closure[0] else []),
        _verdict("K2", ({"A": A} for A in bits.all_subsets(n) if not bits.is_subset(A, closure[A]))),
        _verdict("K3", ({"A": A} for A in bits.all_subsets(n) if closure[closure[A]] != closure[A])),
        _verdict("K4", ({"A": A, "B": B} for A, B in _pairs(n) if closure[A | B] != closure[A] | closure[B])),
    ]
    return AuditReport(space=space.fingerprint, verdicts=verdicts)


def audit_all(space: FiniteSpace, kind: Optional[ProximityKind] = None, allow_large: bool = False) -> AuditReport:
    """Kuratowski first, then the Lodato, EF and compatibility audits, then N0-N6 for strong kinds"""
    report = audit_kuratowski(space, allow_large)
    if kind is None:
        return report
    for audit in (audit_lodato, audit_ef, audit_compatibility):
        report = report.merge(audit(space, kind, allow_large))
    if kind.is_strong:
        report = report.merge(audit_almost(space, kind, allow_large))
    failures = len(report.failures())
    logger.info("Audited %s under %s: %d failing axioms", space.fingerprint, kind.name, failures)
    return report
