import pytest

from ..errors import InputError, UnknownKind, UnsupportedKind
from ..proximity.kinds import CLOSURE_LODATO, INTERIOR_OVERLAP
from .factory import get_half, get_halves
from .subbase import GeneratorFamily, HalfSpec


def test_get_half_parses_plain_and_parameterised_halves():
    """Tests the CLI half names"""
    # Then
    assert get_half("hit") == HalfSpec(GeneratorFamily.HIT)
    assert get_half("far-miss:lodato") == HalfSpec(GeneratorFamily.FAR_MISS, CLOSURE_LODATO)
    assert get_half("strong-hit:ex2") == HalfSpec(GeneratorFamily.STRONG_HIT, INTERIOR_OVERLAP)
    assert get_half("fell-miss").name == "fell-miss"


def test_get_halves_splits_joins():
    """Tests that half+half builds a joined subbase"""
    # When
    halves = get_halves("strong-hit:ex2+far-miss:lodato")

    # Then
    assert [half.name for half in halves] == ["strong-hit:ex2", "far-miss:lodato"]


def test_get_half_raises_for_unsupported_half():
    """Tests that get_half raises NotImplementedError for unknown halves"""
    # When/Then
    with pytest.raises(NotImplementedError, match="Unsupported hyperspace half: vietoris"):
        get_half("vietoris")


def test_get_half_validates_proximity():
    """Tests proximity requirements of each half"""
    # When/Then
    with pytest.raises(UnsupportedKind):
        get_half("strong-hit:lodato")
    with pytest.raises(InputError):
        get_half("far-miss")
    with pytest.raises(InputError):
        get_half("hit:ex1")
    with pytest.raises(UnknownKind):
        get_half("strong-hit:ex9")
