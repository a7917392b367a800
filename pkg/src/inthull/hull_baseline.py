"""Integer hull via inward facet normalization and corner enumeration.

Every facet line is translated inward to the last integer offset whose chord
still contains a lattice point; rebuilding the set from the tightened
half-planes yields Q with the same lattice points as P but with every facet
supported by a lattice chord.  The hull of all stopping-chord extremes is a
central core of the integer hull; what remains are the corner regions of Q
outside that core, which this engine always resolves by direct enumeration —
no recursion — so its cost profile isolates what the sweep-based refinement
engine improves on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import UnboundedSet
from .geom import (
    HalfPlane,
    HullResult,
    PolySet2,
    _intersect_halfplanes,
    area,
    convex_hull,
)
from .hull_new import _degenerate_candidates, residual_regions
from .lattice import SweepHit, _run_sweep
from .oracle import RunStats, enumerate_integer_points


@dataclass(frozen=True)
class Partition:
    """Central hull of the stopping-chord extremes plus the corner regions
    of Q outside it; together they contain every integer-hull vertex."""

    central: HullResult
    corners: Tuple[PolySet2, ...]


def normalize_facets(
    P: PolySet2,
    *,
    max_sweep: Optional[int] = None,
    stats: Optional[RunStats] = None,
) -> Tuple[Optional[PolySet2], List[SweepHit]]:
    """Tighten every facet offset to its inward stopping offset.

    Returns (Q, hits) where Q has exactly the lattice points of P, or
    (None, []) when some facet sweep finds no lattice chord — which happens
    iff P contains no integer points at all.
    """
    hits: List[SweepHit] = []
    tightened: List[HalfPlane] = []
    hint_lo: Optional[int] = None
    hint_hi: Optional[int] = None
    for i in range(len(P.halfplanes)):
        out = _run_sweep(
            P, i, inward=True, max_sweep=max_sweep, hint_lo=hint_lo, hint_hi=hint_hi
        )
        if stats is not None:
            stats.sweep_steps += out.steps
        hint_lo, hint_hi = out.anchor_min, out.anchor_max
        if out.hit is None:
            return None, []
        hits.append(out.hit)
        hp = P.halfplanes[i]
        tightened.append(HalfPlane(hp.a, hp.c, Fraction(out.hit.offset)))
    Q = _intersect_halfplanes(tightened)
    # Every stopping offset is the maximum of its functional over the lattice
    # of P, so each hit point satisfies all tightened constraints: Q is
    # nonempty (though it may be degenerate).
    assert Q is not None
    return Q, hits


def partition(Q: PolySet2, hits: List[SweepHit]) -> Partition:
    """Split Q into the hull of all stopping-chord extremes and the corner
    regions outside it (the same edge-clip construction the refinement
    engine uses for its residual regions)."""
    if not hits:
        raise ValueError("partition requires at least one sweep hit")
    points = set()
    for h in hits:
        points.add(h.lo)
        points.add(h.hi)
    central = convex_hull(points)
    if len(central) <= 1:
        # A single point attaining every facet's lattice maximum is the whole
        # lattice of Q; there is nothing outside it to search.
        corners: List[PolySet2] = []
    else:
        corners = residual_regions(Q, central)
    return Partition(central, tuple(corners))


def integer_hull_baseline(
    P: Optional[PolySet2],
    *,
    max_sweep: Optional[int] = None,
    stats: Optional[RunStats] = None,
) -> HullResult:
    """Canonical integer hull by normalization, partition, and corner
    enumeration (corners are always brute-forced, never recursed)."""
    if P is None:
        return convex_hull([])
    if P.rays:
        raise UnboundedSet("integer hulls are computed for bounded sets only")
    if P.is_degenerate:
        return convex_hull(_degenerate_candidates(P))
    Q, hits = normalize_facets(P, max_sweep=max_sweep, stats=stats)
    if Q is None:
        return convex_hull([])
    if Q.is_degenerate:
        # Normalization preserved the lattice, so Q's chord carries it all.
        return convex_hull(_degenerate_candidates(Q))
    part = partition(Q, hits)
    points = set(part.central)
    q_area = area(Q)
    for corner in part.corners:
        if stats is not None:
            stats.regions += 1
        assert area(corner) < q_area
        if corner.is_degenerate:
            points |= _degenerate_candidates(corner)
        else:
            points |= set(enumerate_integer_points(corner, stats=stats))
    return convex_hull(points)
