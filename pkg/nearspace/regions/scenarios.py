"""Executable counterexample and layout scenarios over exact planar regions."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from ..errors import SetupInvalid, UnknownScenario
from ..rational import RationalPair, distance_above, exact_sqrt, format_rational, norm_squared
from .oracle import sweep
from .predicates import contains, interior, intersects, strongly_near_ex2, strongly_near_mixed
from .shapes import ORIGIN, Circle, ClosedDisk, Empty, OpenDisk, Pt, Region, RegionUnion, union

logger = logging.getLogger(__name__)

ARTIFACT_NOTE = "numeric coordinates are artifact choices; elliptical regions are modelled as disks"


class Claim(BaseModel):
    name: str
    holds: bool
    trace: List[str] = Field(default_factory=list)


class ScenarioResult(BaseModel):
    scenario: str
    parameters: Dict[str, Any]
    claims: List[Claim] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)
    setup_valid: bool = True

    @property
    def verdict(self) -> bool:
        return self.setup_valid and all(claim.holds for claim in self.claims)

    def claim(self, name: str) -> Claim:
        return next(claim for claim in self.claims if claim.name == name)

    def render(self) -> Dict[str, Any]:
        return {**self.model_dump(), "verdict": self.verdict}


def _show(region: Region) -> str:
    if isinstance(region, RegionUnion):
        return "union(" + ", ".join(_show(member) for member in region.members) + ")"
    if isinstance(region, Empty):
        return "empty"
    rendered = region.render()
    args = ",".join(rendered["center"])
    if "radius" in rendered:
        args += f";{rendered['radius']}"
    return f"{rendered['shape']}({args})"


def _step(predicate: str, *args: Region, value: Any) -> str:
    shown = ", ".join(_show(arg) for arg in args)
    return f"{predicate}({shown}) = {str(value).lower()}"


@dataclass(frozen=True)
class CandidateGrid:
    """Open disks swept when no single disk can stand for every open set"""

    lower: Fraction = Fraction(-3)
    upper: Fraction = Fraction(3)
    step: Fraction = Fraction(3, 5)
    radii: Tuple[Fraction, ...] = (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2))

    def centers(self) -> List[Fraction]:
        count = int((self.upper - self.lower) / self.step)
        return [self.lower + i * self.step for i in range(count + 1)]

    def candidates(self) -> List[OpenDisk]:
        axis = self.centers()
        return [OpenDisk((x, y), r) for x in axis for y in axis for r in self.radii]

    def render(self) -> Dict[str, Any]:
        return {
            "lower": format_rational(self.lower),
            "upper": format_rational(self.upper),
            "step": format_rational(self.step),
            "radii": [format_rational(r) for r in self.radii],
        }


def scenario_thm2_dir1(
    a_radius: Fraction = Fraction(1),
    e_radius: Fraction = Fraction(1, 2),
    e_shape: str = "circle",
    grid: Optional[CandidateGrid] = None,
) -> ScenarioResult:
    """A closed set with empty interior hits A but is strongly near no open H.

    With e_shape="closed-disk" the run is a control: its claims expect a nonempty
    interior and some accepted candidate H, so a correct control still succeeds.
    """
    grid = grid or CandidateGrid()
    A = OpenDisk(ORIGIN, a_radius)
    control = False
    if e_shape == "circle":
        E: Region = Circle(ORIGIN, e_radius)
    elif e_shape == "closed-disk":
        E = ClosedDisk(ORIGIN, e_radius)
        control = True
    else:
        raise UnknownScenario(f"Unsupported witness shape: {e_shape}")

    result = ScenarioResult(
        scenario="thm2-dir1",
        parameters={"A": A.render(), "E": E.render(), "grid": grid.render()},
        metadata={
            "note": "the grid is a demonstration; the empty interior settles every open H",
            "control": control,
        },
    )

    meets = intersects(E, A)
    if not meets:
        result.setup_valid = False
        result.metadata["setup_failure"] = _step("intersects", E, A, value=meets)
        logger.warning("Setup invalid: %s", result.metadata["setup_failure"])
        return result
    result.claims.append(Claim(name="E meets A", holds=meets, trace=[_step("intersects", E, A, value=meets)]))

    interior_E = interior(E)
    empty = isinstance(interior_E, Empty)
    interior_trace = [f"interior({_show(E)}) = {_show(interior_E)}"]
    if control:
        result.claims.append(Claim(name="interior of E is nonempty", holds=not empty, trace=interior_trace))
    else:
        result.claims.append(Claim(name="interior of E is empty", holds=empty, trace=interior_trace))

    candidates = grid.candidates()
    accepted = [H for H in candidates if strongly_near_ex2(E, H)]
    trace = [f"{len(candidates)} candidate open disks, {len(accepted)} strongly near E"]
    if accepted:
        trace.append(_step("strongly_near_ex2", E, accepted[0], value=True))
    if control:
        result.claims.append(Claim(name="E strongly near some candidate H", holds=bool(accepted), trace=trace))
    else:
        result.claims.append(Claim(name="E strongly near no candidate H", holds=not accepted, trace=trace))
    result.metadata.update({"candidates": len(candidates), "accepted": len(accepted)})

    logger.debug("Candidate sweep: %d of %d accepted", len(accepted), len(candidates))
    return result


DEFAULT_H_CENTER: RationalPair = (Fraction(13, 5), Fraction(0))
DEFAULT_H_RADIUS = Fraction(1)
DEFAULT_A_CENTER: RationalPair = (Fraction(11, 5), Fraction(0))
DEFAULT_A_RADIUS = Fraction(3, 10)


def circle_radius_through(center: RationalPair, disk: Region) -> Tuple[Fraction, bool]:
    """Radius s of a circle about O through center, exact when |center| is rational.

    Otherwise s is a rational approximation checked exactly to still meet disk.
    """
    squared = norm_squared(center)
    root = exact_sqrt(squared)
    if root is not None:
        return root, True
    estimate = Fraction(math.sqrt(squared))
    for digits in range(3, 16):
        s = estimate.limit_denominator(10**digits)
        if s > 0 and intersects(Circle(ORIGIN, s), disk):
            return s, False
    raise SetupInvalid("circle", f"No rational circle about O meets {_show(disk)}")


def scenario_thm2_dir2(
    h_center: RationalPair = DEFAULT_H_CENTER,
    h_radius: Fraction = DEFAULT_H_RADIUS,
    a_center: RationalPair = DEFAULT_A_CENTER,
    a_radius: Fraction = DEFAULT_A_RADIUS,
) -> ScenarioResult:
    """A closed set C hits A inside H while staying off the strongly-hit set of H"""
    H = OpenDisk(h_center, h_radius)
    A = OpenDisk(a_center, a_radius)
    unit = ClosedDisk(ORIGIN, Fraction(1))

    # H keeps a positive gap from the unit disk iff |h_center| > 1 + h_radius
    if not distance_above(norm_squared(h_center), 1 + h_radius, strict=True):
        raise SetupInvalid("gap", f"{_show(H)} is not at positive distance from {_show(unit)}")
    if not contains(H, A):
        raise SetupInvalid("containment", f"{_show(A)} is not contained in {_show(H)}")

    E = ClosedDisk(ORIGIN, Fraction(2))
    s, exact = circle_radius_through(a_center, A)
    C = union(unit, Circle(ORIGIN, s))

    result = ScenarioResult(
        scenario="thm2-dir2",
        parameters={"H": H.render(), "A": A.render(), "E": E.render(), "C": C.render(), "s": format_rational(s)},
        metadata={"note": ARTIFACT_NOTE, "s_exact": exact},
    )

    e_near = strongly_near_ex2(E, H)
    result.claims.append(
        Claim(name="E strongly near H", holds=e_near, trace=[_step("strongly_near_ex2", E, H, value=e_near)])
    )

    c_meets = intersects(C, A)
    result.claims.append(Claim(name="C meets A", holds=c_meets, trace=[_step("intersects", C, A, value=c_meets)]))

    c_near = strongly_near_ex2(C, H)
    result.claims.append(
        Claim(
            name="C not strongly near H",
            holds=not c_near,
            trace=[f"interior({_show(C)}) = {_show(interior(C))}", _step("strongly_near_ex2", C, H, value=c_near)],
        )
    )
    return result


@dataclass(frozen=True)
class Fig31Layout:
    A: Region = ClosedDisk((Fraction(49, 50), Fraction(27, 20)), Fraction(39, 50))
    B: Region = ClosedDisk((Fraction(9, 50), Fraction(31, 20)), Fraction(22, 25))
    D: Region = OpenDisk((Fraction(119, 50), Fraction(9, 4)), Fraction(7, 10))
    E: Region = ClosedDisk((Fraction(169, 50), Fraction(37, 20)), Fraction(1))


FIG31_VARIANTS: Dict[str, Fig31Layout] = {
    "default": Fig31Layout(),
    # D slid left until it only touches E from outside
    "tangent": Fig31Layout(D=OpenDisk((Fraction(84, 50), Fraction(37, 20)), Fraction(7, 10))),
    "point": Fig31Layout(E=Pt((Fraction(119, 50), Fraction(9, 4)))),
}


def scenario_fig31(layout: Optional[Fig31Layout] = None, variant: str = "default") -> ScenarioResult:
    """Two overlapping disks strongly near under ex2 and an open/closed pair near under ex3"""
    if layout is None:
        if variant not in FIG31_VARIANTS:
            raise UnknownScenario(f"Unsupported layout variant: {variant}")
        layout = FIG31_VARIANTS[variant]

    result = ScenarioResult(
        scenario="fig31",
        parameters={name: getattr(layout, name).render() for name in ("A", "B", "D", "E")},
        metadata={"variant": variant, "note": ARTIFACT_NOTE},
    )
    ab = strongly_near_ex2(layout.A, layout.B)
    trace = [_step("strongly_near_ex2", layout.A, layout.B, value=ab)]
    result.claims.append(Claim(name="A strongly near B (ex2)", holds=ab, trace=trace))

    de = strongly_near_mixed(layout.D, layout.E)
    trace = [_step("strongly_near_ex3", layout.D, layout.E, value=de)]
    result.claims.append(Claim(name="D strongly near E (ex3)", holds=de, trace=trace))
    return result


def scenario_oracle(seed: int = 0, count: int = 10_000) -> ScenarioResult:
    """Exact intersects against the sampling oracle on seeded random pairs"""
    report = sweep(seed=seed, count=count)
    result = ScenarioResult(
        scenario="oracle",
        parameters={"seed": seed, "count": count},
        metadata={
            "skipped_near_boundary": report.skipped,
            "boundary_checked_one_way": report.boundary_checked,
            "resolution": report.resolution,
            "margin": report.margin,
        },
    )
    trace = [f"{report.compared} pairs compared, {len(report.disagreements)} disagreements"]
    trace.extend(report.describe_disagreements())
    agree = not report.disagreements
    result.claims.append(Claim(name="exact and sampled intersection agree", holds=agree, trace=trace))
    return result


SCENARIOS: Dict[str, Callable[..., ScenarioResult]] = {
    "fig31": scenario_fig31,
    "thm2-dir1": scenario_thm2_dir1,
    "thm2-dir2": scenario_thm2_dir2,
    "oracle": scenario_oracle,
}


def get_scenario(name: str) -> Callable[..., ScenarioResult]:
    if name not in SCENARIOS:
        raise UnknownScenario(f"Unsupported scenario: {name}")
    return SCENARIOS[name]
