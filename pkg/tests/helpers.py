"""Shared builders and independent reference implementations for the tests.

Everything here that checks a result is deliberately written from first
principles (plain Fraction arithmetic, no calls into the hull engines), so
the tests compare the package against straight-line reference code rather
than against itself.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from inthull import PolySet2, polyset_from_vertices

RatPoint = Tuple[Fraction, Fraction]


def frac_cross(o: Sequence[Fraction], a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """Plain-Fraction cross product (a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def rational_hull(points: Sequence[RatPoint]) -> List[RatPoint]:
    """Monotone-chain convex hull over rational points, strict turns only.

    Returns the hull CCW starting from the lexicographically smallest point;
    collinear and duplicate points are dropped.  Independent of the package.
    """
    pts = sorted(set((Fraction(x), Fraction(y)) for x, y in points))
    if len(pts) <= 2:
        return pts
    lower: List[RatPoint] = []
    for p in pts:
        while len(lower) >= 2 and frac_cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[RatPoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and frac_cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:  # all input points collinear
        return [pts[0], pts[-1]]
    return hull


def random_polyset(rng: random.Random, *, max_num: int = 50, max_den: int = 10,
                   min_pts: int = 3, max_pts: int = 12) -> PolySet2:
    """A random bounded polygon: hull of 3..12 random rational points.

    Coordinates have |numerator| <= max_num and denominator <= max_den.
    Resamples until the points span a proper (2-dimensional) polygon.
    """
    while True:
        k = rng.randint(min_pts, max_pts)
        pts = [
            (
                Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)),
                Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)),
            )
            for _ in range(k)
        ]
        hull = rational_hull(pts)
        if len(hull) >= 3:
            return polyset_from_vertices(hull)


def small_corpus(count: int, base_seed: int = 0, **kw) -> List[PolySet2]:
    """Deterministic list of `count` random polygons."""
    return [random_polyset(random.Random(base_seed + i), **kw) for i in range(count)]


def brute_points_in(P: PolySet2) -> List[Tuple[int, int]]:
    """Integer points of P by testing every cell of the bounding box.

    Written against the raw halfplane data with Fraction arithmetic only;
    used as the trusted reference for the oracle and the sweep tests.
    """
    from math import ceil, floor

    xs = [v.x for v in P.vertices]
    ys = [v.y for v in P.vertices]
    out: List[Tuple[int, int]] = []
    for x in range(ceil(min(xs)), floor(max(xs)) + 1):
        for y in range(ceil(min(ys)), floor(max(ys)) + 1):
            if all(h.a * x + h.c * y <= h.b for h in P.halfplanes):
                out.append((x, y))
    return out


def reference_stop(P: PolySet2, facet_index: int, side: str) -> Optional[Tuple[int, Tuple[int, int], Tuple[int, int]]]:
    """Expected sweep result computed by full enumeration.

    For the facet line a·x + c·y = b the inward sweep must stop at the
    largest value of a·p over integer points p of P, and the sweep from the
    opposite side at the smallest; lo/hi are the lexicographic extremes of
    the points attaining it.  Returns None when P has no integer points.
    """
    h = P.halfplanes[facet_index]
    pts = brute_points_in(P)
    if not pts:
        return None
    vals = [(h.a * x + h.c * y, (x, y)) for x, y in pts]
    target = max(v for v, _ in vals) if side == "inward" else min(v for v, _ in vals)
    on_line = sorted(p for v, p in vals if v == target)
    return int(target), on_line[0], on_line[-1]


def hull_tuples(hull) -> List[Tuple[int, int]]:
    """HullResult as plain (x, y) tuples for comparisons in asserts."""
    return [(p.x, p.y) for p in hull]
