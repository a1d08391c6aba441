"""Exact rational helpers shared by the metric proximity and the planar engine."""

from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple, Union

from .errors import InputError

Rational = Fraction
RationalPair = Tuple[Fraction, Fraction]


def parse_rational(value: Union[str, int, float, Fraction]) -> Fraction:
    """Parse "2.6", "13/5", 2 or Fraction(13, 5) exactly; floats go through their decimal repr"""
    try:
        if isinstance(value, float):
            return Fraction(repr(value))
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise InputError(f"Not a rational number: {value!r}") from e


def parse_pair(value: str) -> RationalPair:
    parts = value.split(",")
    if len(parts) != 2:
        raise InputError(f"Expected a pair 'x,y', got {value!r}")
    return parse_rational(parts[0].strip()), parse_rational(parts[1].strip())


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def exact_sqrt(value: Fraction) -> Optional[Fraction]:
    """Square root of a non-negative rational when it is itself rational"""
    if value < 0:
        return None
    numerator, denominator = isqrt(value.numerator), isqrt(value.denominator)
    if numerator * numerator == value.numerator and denominator * denominator == value.denominator:
        return Fraction(numerator, denominator)
    return None


def squared_distance(p: RationalPair, q: RationalPair) -> Fraction:
    dx, dy = p[0] - q[0], p[1] - q[1]
    return dx * dx + dy * dy


def norm_squared(p: RationalPair) -> Fraction:
    return p[0] * p[0] + p[1] * p[1]


def distance_below(squared: Fraction, bound: Fraction, strict: bool) -> bool:
    """Compare a distance given by its square with a rational bound: d < bound, or d <= bound"""
    if bound < 0:
        return False
    if strict:
        return squared < bound * bound
    return squared <= bound * bound


def distance_above(squared: Fraction, bound: Fraction, strict: bool) -> bool:
    """d > bound, or d >= bound"""
    if bound < 0:
        return True
    if strict:
        return squared > bound * bound
    return squared >= bound * bound
