"""Integer hull via per-facet opposite-side sweeps and recursive refinement.

For each facet direction the first lattice chord (scanning from the far side
of the polygon toward the facet) yields the lattice points that are extreme
in that direction; they are vertices-in-waiting of the integer hull.  What
remains uncertain is only the area of P outside the hull of those candidates,
which this module cuts into residual regions and resolves either by direct
enumeration (small regions) or by applying the same algorithm recursively
(large ones).  A final convex hull of everything collected is the answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Set, Tuple

from .errors import UnboundedSet
from .geom import (
    HalfPlane,
    HullResult,
    IntPoint2,
    Line,
    Point2,
    PolySet2,
    Segment,
    _degenerate_polyset,
    area,
    clip,
    convex_hull,
    line_through,
)
from .lattice import SweepHit, _run_sweep, chord, integer_points_on_chord
from .oracle import RunStats, bbox_cell_count, enumerate_integer_points


@dataclass(frozen=True)
class RefineConfig:
    """Cost knobs for the refinement stage; the result never depends on them.

    Regions whose bounding box holds at most `brute_force_cell_threshold`
    lattice cells are enumerated directly; larger ones are refined
    recursively until `max_depth` levels, after which enumeration is forced.
    """

    brute_force_cell_threshold: int = 256
    max_depth: int = 16

    def __post_init__(self) -> None:
        if self.brute_force_cell_threshold < 1:
            raise ValueError("brute_force_cell_threshold must be >= 1")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


@dataclass(frozen=True)
class CandidateSet:
    """Deduplicated integer points known to lie in the input set."""

    points: FrozenSet[IntPoint2]


def replace_facets(
    P: PolySet2,
    *,
    max_sweep: Optional[int] = None,
    stats: Optional[RunStats] = None,
) -> Tuple[CandidateSet, List[Tuple[int, Line, SweepHit]]]:
    """Sweep every facet from the opposite side of P.

    Each hit contributes its extreme lattice points to the candidate set and
    its stopping line to the chord list; facets whose sweep finds nothing
    contribute nothing.  An empty candidate set means P has no integer
    points at all (any single miss already implies that).
    """
    points: Set[IntPoint2] = set()
    chords: List[Tuple[int, Line, SweepHit]] = []
    hint_lo: Optional[int] = None
    hint_hi: Optional[int] = None
    for i in range(len(P.halfplanes)):
        out = _run_sweep(
            P, i, inward=False, max_sweep=max_sweep, hint_lo=hint_lo, hint_hi=hint_hi
        )
        if stats is not None:
            stats.sweep_steps += out.steps
        # The minimizing/maximizing vertices rotate with the facet normal, so
        # this facet's anchors are one-step hints for the next facet.
        hint_lo, hint_hi = out.anchor_min, out.anchor_max
        if out.hit is None:
            continue
        points.add(out.hit.lo)
        points.add(out.hit.hi)
        hp = P.halfplanes[i]
        chords.append((i, Line(hp.a, hp.c, Fraction(out.hit.offset)), out.hit))
    return CandidateSet(frozenset(points)), chords


def _integral_point(p: Point2) -> Optional[IntPoint2]:
    if p.x.denominator == 1 and p.y.denominator == 1:
        return IntPoint2(int(p.x), int(p.y))
    return None


def _degenerate_candidates(R: PolySet2) -> Set[IntPoint2]:
    """Extreme lattice points of a point/segment region (all that a hull needs)."""
    verts = R.vertices
    if len(verts) == 1:
        z = _integral_point(verts[0])
        return {z} if z is not None else set()
    l = line_through(verts[0], verts[1])
    hit = integer_points_on_chord(l, Segment(verts[0], verts[1]))
    if hit is None:
        return set()
    return {hit.lo, hit.hi}


def _filter_region(
    region: Optional[PolySet2], known: Tuple[IntPoint2, IntPoint2]
) -> Optional[PolySet2]:
    """Drop empty clips and degenerate clips that cannot add new hull points.

    A degenerate (point/segment) region is kept only when its extreme lattice
    points include one outside `known` (the generating hull edge's
    endpoints); anything between two known hull points is never a hull
    vertex.
    """
    if region is None:
        return None
    if not region.is_degenerate:
        return region
    extremes = _degenerate_candidates(region)
    if all(p in known for p in extremes):  # vacuously true when no lattice points
        return None
    return region


def _two_point_regions(P: PolySet2, u: IntPoint2, w: IntPoint2) -> List[PolySet2]:
    """Residual regions when the partial hull is a single lattice segment.

    Every lattice point of P either lies on the segment's line — covered by
    the degenerate chord piece — or at integer level >= b+1 or <= b-1 of the
    line's functional, covered by the two shifted clips.  The open strips in
    between contain no lattice points, so the three pieces cover the lattice
    of P exactly, each with strictly smaller area than P.
    """
    l = line_through(u, w)
    assert l.b.denominator == 1, "a lattice segment's line has an integer offset"
    b = l.b
    known = (u, w)
    regions: List[PolySet2] = []
    for hp in (HalfPlane(l.a, l.c, b - 1), HalfPlane(-l.a, -l.c, -(b + 1))):
        region = _filter_region(clip(P, hp), known)
        if region is not None:
            regions.append(region)
    ch = chord(P, l)
    piece: Optional[PolySet2] = None
    if isinstance(ch, Segment):
        piece = _degenerate_polyset([ch.p, ch.q])
    elif ch is not None:
        piece = _degenerate_polyset([ch])
    piece = _filter_region(piece, known)
    if piece is not None:
        regions.append(piece)
    return regions


def residual_regions(P: PolySet2, hull_so_far: HullResult) -> List[PolySet2]:
    """Clip P to the outside of each edge of the partial hull.

    Together the returned regions contain every lattice point of P that is
    not interior to the partial hull, and each has strictly smaller area
    than P.  Degenerate clips that cannot contribute new hull points are
    filtered out.
    """
    pts = list(hull_so_far)
    if len(pts) < 2:
        raise ValueError("residual regions need a hull of at least 2 points")
    if len(pts) == 2:
        return _two_point_regions(P, pts[0], pts[1])
    regions: List[PolySet2] = []
    n = len(pts)
    for i in range(n):
        u, w = pts[i], pts[(i + 1) % n]
        z = pts[(i + 2) % n]
        l = line_through(u, w)
        fz = l.eval_at(z)
        # Canonical hulls have no 3 collinear vertices, so z picks a side.
        assert fz != l.b
        if fz < l.b:
            outer = HalfPlane(-l.a, -l.c, -l.b)
        else:
            outer = HalfPlane(l.a, l.c, l.b)
        region = _filter_region(clip(P, outer), (u, w))
        if region is not None:
            regions.append(region)
    return regions


def brute_force_region(R: PolySet2, *, stats: Optional[RunStats] = None) -> CandidateSet:
    """All integer points of a region, as a candidate set."""
    return CandidateSet(frozenset(enumerate_integer_points(R, stats=stats)))


def _collect_candidates(
    P: PolySet2,
    cfg: RefineConfig,
    depth_left: int,
    level: int,
    max_sweep: Optional[int],
    stats: Optional[RunStats],
) -> Set[IntPoint2]:
    """Lattice points of P whose convex hull equals P's integer hull."""
    if stats is not None and level > stats.max_depth:
        stats.max_depth = level
    candidates, _ = replace_facets(P, max_sweep=max_sweep, stats=stats)
    points = set(candidates.points)
    if len(points) <= 1:
        # No hit on some facet means no lattice points anywhere; a single
        # candidate attaining every facet's lattice minimum is the whole
        # lattice (the facet normals positively span the plane).
        return points
    hull_so_far = convex_hull(points)
    parent_area = area(P)
    for region in residual_regions(P, hull_so_far):
        if stats is not None:
            stats.regions += 1
        assert area(region) < parent_area
        if region.is_degenerate:
            points |= _degenerate_candidates(region)
        elif depth_left <= 0 or bbox_cell_count(region) <= cfg.brute_force_cell_threshold:
            points |= brute_force_region(region, stats=stats).points
        else:
            points |= _collect_candidates(
                region, cfg, depth_left - 1, level + 1, max_sweep, stats
            )
    return points


def integer_hull_new(
    P: Optional[PolySet2],
    cfg: RefineConfig = RefineConfig(),
    *,
    max_sweep: Optional[int] = None,
    stats: Optional[RunStats] = None,
) -> HullResult:
    """Canonical integer hull of a bounded set by facet sweeps + refinement.

    Accepts None (empty set) and degenerate sets; raises
    :class:`UnboundedSet` when P has rays.  The result is independent of
    `cfg`, which only trades recursion against direct enumeration.
    """
    if P is None:
        return convex_hull([])
    if P.rays:
        raise UnboundedSet("integer hulls are computed for bounded sets only")
    if P.is_degenerate:
        return convex_hull(_degenerate_candidates(P))
    points = _collect_candidates(P, cfg, cfg.max_depth, 0, max_sweep, stats)
    return convex_hull(points)
