from typing import List

from ..errors import UnknownKind
from ..proximity.factory import get_proximity
from .subbase import GeneratorFamily, HalfSpec


def get_half(spec: str) -> HalfSpec:
    """Resolve one half: hit | miss | fell-miss | far-miss:KIND | strong-hit:ex1|ex2|ex3"""
    family_name, _, proximity_name = spec.strip().partition(":")
    try:
        family = GeneratorFamily(family_name)
    except ValueError as e:
        raise UnknownKind(f"Unsupported hyperspace half: {spec}") from e
    proximity = get_proximity(proximity_name) if proximity_name else None
    return HalfSpec(family=family, proximity=proximity)


def get_halves(spec: str) -> List[HalfSpec]:
    """Resolve a join of halves written half+half, e.g. strong-hit:ex2+far-miss:lodato"""
    return [get_half(part) for part in spec.split("+")]
