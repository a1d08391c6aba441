from .factory import get_half, get_halves
from .generated import Comparison, NonOpenWitness, Verdict, compare, is_open_in, minimal_neighbourhood
from .subbase import (
    Generator,
    GeneratorFamily,
    HalfSpec,
    HyperSubbase,
    build_subbase,
    cl_points,
    far_miss_set,
    fell_miss_set,
    hit_set,
    miss_set,
    strong_hit_set,
)
from .theorems import AdmissibilityReport, admissibility_check, lemma_check, remark_check

__all__ = [
    "AdmissibilityReport",
    "Comparison",
    "Generator",
    "GeneratorFamily",
    "HalfSpec",
    "HyperSubbase",
    "NonOpenWitness",
    "Verdict",
    "admissibility_check",
    "build_subbase",
    "cl_points",
    "compare",
    "far_miss_set",
    "fell_miss_set",
    "get_half",
    "get_halves",
    "hit_set",
    "is_open_in",
    "lemma_check",
    "minimal_neighbourhood",
    "miss_set",
    "remark_check",
    "strong_hit_set",
]
