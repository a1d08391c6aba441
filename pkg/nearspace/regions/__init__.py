from .predicates import (
    closure,
    contains,
    contains_point,
    interior,
    intersects,
    strongly_near_ex2,
    strongly_near_mixed,
    strongly_near_region,
)
from .scenarios import (
    ScenarioResult,
    get_scenario,
    scenario_fig31,
    scenario_oracle,
    scenario_thm2_dir1,
    scenario_thm2_dir2,
)
from .shapes import ORIGIN, ROTATIONS, Circle, ClosedDisk, Empty, OpenDisk, Pt, Region, RegionUnion, rotate, union

__all__ = [
    "ORIGIN",
    "ROTATIONS",
    "Circle",
    "ClosedDisk",
    "Empty",
    "OpenDisk",
    "Pt",
    "Region",
    "RegionUnion",
    "ScenarioResult",
    "closure",
    "contains",
    "contains_point",
    "get_scenario",
    "interior",
    "intersects",
    "rotate",
    "scenario_fig31",
    "scenario_oracle",
    "scenario_thm2_dir1",
    "scenario_thm2_dir2",
    "strongly_near_ex2",
    "strongly_near_mixed",
    "strongly_near_region",
    "union",
]
