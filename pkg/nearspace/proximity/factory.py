from ..errors import InputError, UnknownKind
from ..rational import parse_rational
from .kinds import CLOSURE_LODATO, INTERIOR_OVERLAP, INTERSECTION, MIXED, ProximityKind, metric_gap

NAMED_KINDS = {
    "ex1": INTERSECTION,
    "ex2": INTERIOR_OVERLAP,
    "ex3": MIXED,
    "lodato": CLOSURE_LODATO,
}


def get_proximity(name: str) -> ProximityKind:
    """Resolve a CLI proximity name: ex1 | ex2 | ex3 | lodato | metric[:EPS]"""
    name = name.strip()
    if name in NAMED_KINDS:
        return NAMED_KINDS[name]
    if name == "metric":
        return metric_gap()
    if name.startswith("metric:"):
        epsilon = parse_rational(name.split(":", 1)[1])
        if epsilon < 0:
            raise InputError(f"Metric tolerance must be non-negative, got {name!r}")
        return metric_gap(epsilon)
    raise UnknownKind(f"Unsupported proximity: {name}")
