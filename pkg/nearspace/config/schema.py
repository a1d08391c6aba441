from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..rational import parse_pair, parse_rational
from ..regions.scenarios import CandidateGrid
from ..topology.space import FiniteSpace, build_space

RationalValue = Union[str, int, float]


class SpaceFile(BaseModel):
    """A finite space as written on disk: labels, opens as label lists, optional planar coordinates"""

    model_config = ConfigDict(extra="forbid")

    points: List[str] = Field(min_length=1)
    opens: List[List[str]]
    coordinates: Optional[Dict[str, Tuple[RationalValue, RationalValue]]] = None

    @field_validator("points")
    @classmethod
    def points_are_unique(cls, points: List[str]) -> List[str]:
        if len(set(points)) != len(points):
            duplicates = sorted({p for p in points if points.count(p) > 1})
            raise ValueError(f"Duplicate point labels: {duplicates}")
        return points

    @model_validator(mode="after")
    def opens_use_declared_points(self) -> "SpaceFile":
        declared = set(self.points)
        seen = set()
        for open_set in self.opens:
            unknown = set(open_set) - declared
            if unknown:
                raise ValueError(f"Open {open_set} uses undeclared points {sorted(unknown)}")
            key = frozenset(open_set)
            if key in seen:
                raise ValueError(f"Duplicate open set {sorted(key)}")
            seen.add(key)
        if self.coordinates is not None and set(self.coordinates) != declared:
            raise ValueError("Coordinates must be given for exactly the declared points")
        return self

    def to_space(self) -> FiniteSpace:
        index = {label: point for point, label in enumerate(self.points)}
        opens = [sum(1 << index[label] for label in set(open_set)) for open_set in self.opens]
        coordinates = None
        if self.coordinates is not None:
            coordinates = tuple(
                (parse_rational(self.coordinates[label][0]), parse_rational(self.coordinates[label][1]))
                for label in self.points
            )
        return build_space(len(self.points), opens, labels=self.points, coordinates=coordinates)


class OracleConfig(BaseModel):
    seed: int = 0
    count: int = Field(default=10_000, ge=1)


class GridConfig(BaseModel):
    lower: RationalValue = -3
    upper: RationalValue = 3
    step: RationalValue = "3/5"
    radii: List[RationalValue] = Field(default_factory=lambda: ["1/4", "1/2", 1, 2])

    def to_grid(self) -> CandidateGrid:
        return CandidateGrid(
            lower=parse_rational(self.lower),
            upper=parse_rational(self.upper),
            step=parse_rational(self.step),
            radii=tuple(parse_rational(r) for r in self.radii),
        )


class ScenarioParams(BaseModel):
    """Scenario inputs as flags or YAML give them; unset fields keep the scenario defaults"""

    h_center: Optional[str] = None
    h_radius: Optional[RationalValue] = None
    a_center: Optional[str] = None
    a_radius: Optional[RationalValue] = None
    variant: str = "default"
    e_shape: str = "circle"

    def dir2_kwargs(self) -> Dict[str, Any]:
        kwargs: Dict[str, Union[Fraction, Tuple[Fraction, Fraction]]] = {}
        if self.h_center is not None:
            kwargs["h_center"] = parse_pair(self.h_center)
        if self.h_radius is not None:
            kwargs["h_radius"] = parse_rational(self.h_radius)
        if self.a_center is not None:
            kwargs["a_center"] = parse_pair(self.a_center)
        if self.a_radius is not None:
            kwargs["a_radius"] = parse_rational(self.a_radius)
        return kwargs

    def merged(self, overrides: Dict[str, Any]) -> "ScenarioParams":
        return self.model_copy(update={key: value for key, value in overrides.items() if value is not None})


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    allow_large: bool = False
    log_level: Optional[str] = None
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    grid: GridConfig = Field(default_factory=GridConfig)
    scenario: ScenarioParams = Field(default_factory=ScenarioParams)
