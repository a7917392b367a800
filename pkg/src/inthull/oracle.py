"""Brute-force lattice enumeration and the oracle hull engine.

The oracle scans the bounding box column by column, solving each column's
exact rational y-interval from the halfplanes.  It is the trusted reference
the fast engines are tested against, and also the subroutine both engines
use on regions deemed small enough to enumerate directly.  Budgets are
checked against the bounding-box cell count *before* scanning, so a call
either completes or raises without burning time first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd
from typing import List, Optional

from .errors import BudgetExceeded, UnboundedSet
from .geom import HullResult, IntPoint2, PolySet2, Segment, bounding_box, convex_hull, line_through
from .lattice import integer_points_on_chord


@dataclass
class RunStats:
    """Mutable counters an engine fills in while computing a hull."""

    sweep_steps: int = 0  # total facet-line translations across all sweeps
    brute_cells: int = 0  # total bounding-box cells of brute-forced regions
    regions: int = 0  # refinement/corner regions processed
    max_depth: int = 0  # deepest recursion level reached (new engine)
    notes: List[str] = field(default_factory=list)


def bbox_cell_count(P: PolySet2) -> int:
    """Number of integer grid cells in the bounding box of P (0 if none)."""
    xmin, xmax, ymin, ymax = bounding_box(P)
    ncols = floor(xmax) - ceil(xmin) + 1
    nrows = floor(ymax) - ceil(ymin) + 1
    if ncols <= 0 or nrows <= 0:
        return 0
    return ncols * nrows


def enumerate_integer_points(
    P: Optional[PolySet2],
    *,
    budget: int = 10**8,
    stats: Optional[RunStats] = None,
) -> List[IntPoint2]:
    """All integer points of P in lexicographic order.

    Raises BudgetExceeded when the bounding box holds more than `budget`
    cells (checked before any scanning).  P may be degenerate or None.
    """
    if P is None:
        return []
    if P.rays:
        raise UnboundedSet("cannot enumerate an unbounded set")
    cells = bbox_cell_count(P)
    if cells > budget:
        raise BudgetExceeded(f"bounding box has {cells} cells (budget {budget})")
    if stats is not None:
        stats.brute_cells += cells
    if P.is_degenerate:
        return _enumerate_degenerate(P)
    points: List[IntPoint2] = []
    xmin, xmax, ymin, ymax = bounding_box(P)
    for x in range(ceil(xmin), floor(xmax) + 1):
        lo: Fraction = ymin
        hi: Fraction = ymax
        empty = False
        for h in P.halfplanes:
            rest = h.b - h.a * x
            if h.c == 0:
                if rest < 0:
                    empty = True
                    break
            elif h.c > 0:
                bound = rest / h.c
                if bound < hi:
                    hi = bound
            else:
                bound = rest / h.c
                if bound > lo:
                    lo = bound
        if empty:
            continue
        points.extend(IntPoint2(x, y) for y in range(ceil(lo), floor(hi) + 1))
    return points


def _enumerate_degenerate(P: PolySet2) -> List[IntPoint2]:
    verts = P.vertices
    if len(verts) == 1:
        p = verts[0]
        if p.x.denominator == 1 and p.y.denominator == 1:
            return [IntPoint2(int(p.x), int(p.y))]
        return []
    line = line_through(verts[0], verts[1])
    hit = integer_points_on_chord(line, Segment(verts[0], verts[1]))
    if hit is None:
        return []
    lat_dx = hit.hi.x - hit.lo.x
    lat_dy = hit.hi.y - hit.lo.y
    if lat_dx == 0 and lat_dy == 0:
        return [hit.lo]
    # Consecutive lattice points on a line differ by its primitive direction.
    g = gcd(lat_dx, lat_dy)
    dx, dy = lat_dx // g, lat_dy // g
    return [IntPoint2(hit.lo.x + k * dx, hit.lo.y + k * dy) for k in range(g + 1)]


def integer_hull_oracle(
    P: Optional[PolySet2],
    *,
    budget: int = 10**8,
    stats: Optional[RunStats] = None,
) -> HullResult:
    """Integer hull by full enumeration: trusted, exponential-ish, bounded by budget."""
    points = enumerate_integer_points(P, budget=budget, stats=stats)
    return convex_hull(points)
