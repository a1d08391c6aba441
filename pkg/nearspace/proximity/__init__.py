from .factory import get_proximity
from .kinds import (
    CLOSURE_LODATO,
    INTERIOR_OVERLAP,
    INTERSECTION,
    MIXED,
    STRONG_KINDS,
    MetricPoints,
    ProximityKind,
    ProximityTag,
    metric_gap,
)
from .relations import ef_between, gap, near, squared_gap, strong_inclusion, strongly_near

__all__ = [
    "CLOSURE_LODATO",
    "INTERIOR_OVERLAP",
    "INTERSECTION",
    "MIXED",
    "STRONG_KINDS",
    "MetricPoints",
    "ProximityKind",
    "ProximityTag",
    "ef_between",
    "gap",
    "get_proximity",
    "metric_gap",
    "near",
    "squared_gap",
    "strong_inclusion",
    "strongly_near",
]
