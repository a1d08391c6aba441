"""Dense-sampling float oracle for the exact intersection predicate.

Both regions are sampled on the lattice resolution * Z^2 inside the overlap of
their bounding boxes. Circles are thickened to the lattice covering radius so
every circle point has a sample within reach. Random pairs whose witness
margin is below the margin are not compared both ways; above it the oracle must
agree with the exact predicate. Skipped pairs built only from disks are still
checked one way: disks are shrunk by FLOAT_SLACK, so a shared sample lies in
both regions and the exact predicate must agree. Circles and points are
thickened, so no one-sided check is sound for them near tangency.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .predicates import intersects
from .shapes import Circle, ClosedDisk, OpenDisk, Pt, Region, atoms, union

logger = logging.getLogger(__name__)

RESOLUTION = 1e-3
MARGIN = 1e-2
FLOAT_SLACK = 1e-9
CHUNK_ROWS = 256

Box = Tuple[float, float, float, float]


def _center(region) -> Tuple[float, float]:
    return float(region.center[0]), float(region.center[1])


def covering_radius(resolution: float) -> float:
    return resolution * math.sqrt(2) / 2


def bounding_box(region: Region, resolution: float = RESOLUTION) -> Optional[Box]:
    boxes = []
    for atom in atoms(region):
        cx, cy = _center(atom)
        reach = 0.0 if isinstance(atom, Pt) else float(atom.radius)
        if isinstance(atom, Circle):
            reach += covering_radius(resolution)
        boxes.append((cx - reach, cy - reach, cx + reach, cy + reach))
    if not boxes:
        return None
    return (
        min(box[0] for box in boxes),
        min(box[1] for box in boxes),
        max(box[2] for box in boxes),
        max(box[3] for box in boxes),
    )


def membership(
    region: Region, xs: np.ndarray, ys: np.ndarray, resolution: float = RESOLUTION, shrink: float = 0.0
) -> np.ndarray:
    """Boolean mask over the grid ys x xs (rows are y); disks lose `shrink` from their radius"""
    mask = np.zeros((ys.size, xs.size), dtype=bool)
    tolerance = covering_radius(resolution)
    for atom in atoms(region):
        cx, cy = _center(atom)
        dx = xs[np.newaxis, :] - cx
        dy = ys[:, np.newaxis] - cy
        squared = dx * dx + dy * dy
        if isinstance(atom, Pt):
            mask |= squared <= tolerance * tolerance
            continue
        r = float(atom.radius)
        if isinstance(atom, (OpenDisk, ClosedDisk)):
            r -= shrink
        if isinstance(atom, OpenDisk):
            mask |= squared < r * r
        elif isinstance(atom, ClosedDisk):
            mask |= squared <= r * r
        elif isinstance(atom, Circle):
            mask |= np.abs(np.sqrt(squared) - r) <= tolerance
    return mask


def _lattice(low: float, high: float, resolution: float) -> np.ndarray:
    return np.arange(math.ceil(low / resolution), math.floor(high / resolution) + 1) * resolution


def _sampled_atoms_intersect(left: Region, right: Region, resolution: float, shrink: float = 0.0) -> bool:
    # a point is its own single sample
    if isinstance(left, Pt) or isinstance(right, Pt):
        point, other = (left, right) if isinstance(left, Pt) else (right, left)
        px, py = _center(point)
        if isinstance(other, Pt):
            qx, qy = _center(other)
            return math.hypot(px - qx, py - qy) <= covering_radius(resolution)
        return bool(membership(other, np.array([px]), np.array([py]), resolution, shrink).any())

    box_left, box_right = bounding_box(left, resolution), bounding_box(right, resolution)
    x0, y0 = max(box_left[0], box_right[0]), max(box_left[1], box_right[1])
    x1, y1 = min(box_left[2], box_right[2]), min(box_left[3], box_right[3])
    xs, ys = _lattice(x0, x1, resolution), _lattice(y0, y1, resolution)
    if not xs.size or not ys.size:
        return False
    for start in range(0, ys.size, CHUNK_ROWS):
        rows = ys[start : start + CHUNK_ROWS]
        if (membership(left, xs, rows, resolution, shrink) & membership(right, xs, rows, resolution, shrink)).any():
            return True
    return False


def sampled_intersects(left: Region, right: Region, resolution: float = RESOLUTION, shrink: float = 0.0) -> bool:
    return any(_sampled_atoms_intersect(a, b, resolution, shrink) for a in atoms(left) for b in atoms(right))


def disks_only(region: Region) -> bool:
    return all(isinstance(atom, (OpenDisk, ClosedDisk)) for atom in atoms(region))


def _atom_margin(left: Region, right: Region) -> float:
    if isinstance(right, Pt) and not isinstance(left, Pt):
        left, right = right, left
    if isinstance(left, Circle) and not isinstance(right, Circle):
        left, right = right, left
    (lx, ly), (rx, ry) = _center(left), _center(right)
    d = math.hypot(lx - rx, ly - ry)
    if isinstance(left, Pt):
        if isinstance(right, Pt):
            return -d
        if isinstance(right, Circle):
            return -abs(d - float(right.radius))
        return float(right.radius) - d
    r1, r2 = float(left.radius), float(right.radius)
    if isinstance(right, Circle):
        if isinstance(left, Circle):
            return min(r1 + r2 - d, d - abs(r1 - r2))
        return r1 - abs(d - r2)
    return r1 + r2 - d


def witness_margin(left: Region, right: Region) -> float:
    """Signed float slack of the intersection verdict: overlap depth when positive, separation when negative"""
    margins = [_atom_margin(a, b) for a in atoms(left) for b in atoms(right)]
    return max(margins) if margins else -math.inf


def random_region(rng: np.random.Generator) -> Region:
    """Point, disk, circle or ringed disk with centres in [-1, 1]^2 and radii in [1/10, 1/2]"""
    center = (Fraction(int(rng.integers(-100, 101)), 100), Fraction(int(rng.integers(-100, 101)), 100))
    radius = Fraction(int(rng.integers(10, 51)), 100)
    shape = int(rng.integers(5))
    if shape == 0:
        return Pt(center)
    if shape == 1:
        return OpenDisk(center, radius)
    if shape == 2:
        return ClosedDisk(center, radius)
    if shape == 3:
        return Circle(center, radius)
    return union(ClosedDisk(center, radius), Circle(center, radius + Fraction(1, 10)))


@dataclass
class Disagreement:
    left: Region
    right: Region
    exact: bool
    sampled: bool
    margin: float


@dataclass
class SweepReport:
    seed: int
    compared: int = 0
    skipped: int = 0
    boundary_checked: int = 0
    resolution: float = RESOLUTION
    margin: float = MARGIN
    disagreements: List[Disagreement] = field(default_factory=list)

    def describe_disagreements(self) -> List[str]:
        return [
            f"{item.left.render()} vs {item.right.render()}: "
            f"exact={item.exact} sampled={item.sampled} margin={item.margin:.4g}"
            for item in self.disagreements
        ]


def check_one_way(report: SweepReport, left: Region, right: Region, slack: float) -> None:
    report.boundary_checked += 1
    if sampled_intersects(left, right, report.resolution, FLOAT_SLACK) and not intersects(left, right):
        report.disagreements.append(Disagreement(left, right, False, True, slack))
        logger.warning("Oracle found a shared sample for disjoint %s and %s", left.render(), right.render())


def sweep(seed: int, count: int, resolution: float = RESOLUTION, margin: float = MARGIN) -> SweepReport:
    rng = np.random.default_rng(seed)
    report = SweepReport(seed=seed, resolution=resolution, margin=margin)
    while report.compared < count:
        left, right = random_region(rng), random_region(rng)
        slack = witness_margin(left, right)
        if abs(slack) < margin:
            report.skipped += 1
            if disks_only(left) and disks_only(right):
                check_one_way(report, left, right, slack)
            continue
        report.compared += 1
        exact, sampled = intersects(left, right), sampled_intersects(left, right, resolution)
        if exact != sampled:
            report.disagreements.append(Disagreement(left, right, exact, sampled, slack))
            logger.warning("Oracle disagreement on %s vs %s", left.render(), right.render())

    logger.debug(
        "Sweep seed=%d: %d compared, %d skipped, %d checked one way",
        seed,
        report.compared,
        report.skipped,
        report.boundary_checked,
    )
    return report

