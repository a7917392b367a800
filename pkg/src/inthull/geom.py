"""Exact rational planar geometry.

Points, lines, half-planes, orientation and intersection predicates, convex
hulls of integer points, and the bounded 2D polyhedral-set type with dual
half-plane (H) and vertex (V) representations.

All coordinates are exact rationals (`fractions.Fraction`, with plain `int`
accepted anywhere a rational is expected) and every predicate is computed
exactly.  No floating point is used anywhere in this package's core.

Conventions used throughout:

* A line is stored as ``a*x + c*y = b`` with coprime integers ``(a, c)``,
  sign-canonicalized so ``a > 0`` or (``a == 0`` and ``c > 0``); the offset
  ``b`` stays rational.  A line contains integer points iff ``b`` is an
  integer (given ``gcd(a, c) == 1``).
* A half-plane is ``a*x + c*y <= b`` with coprime integers ``(a, c)``.  Its
  sign is *not* canonicalized: orientation is meaning, ``(a, c)`` points out
  of the feasible side.
* A :class:`PolySet2` with three or more vertices stores a strictly convex
  counter-clockwise vertex cycle starting at the lexicographically smallest
  vertex, and ``halfplanes[i]`` is exactly the supporting half-plane of the
  edge ``vertices[i] -> vertices[i+1]``.  Sets with one or two vertices are
  degenerate (a point or a segment) and carry no half-planes.
* The empty set is represented by ``None`` wherever an operation can produce
  it (e.g. :func:`clip`); public constructors raise :class:`EmptySet` instead
  of returning ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import (
    CoincidentLines,
    DegenerateSet,
    EmptySet,
    IdenticalPoints,
    NotConvexPosition,
    ParallelLines,
    UnboundedSet,
)

Rational = Union[int, Fraction]


def _frac(value: Rational) -> Fraction:
    """Coerce to Fraction, rejecting floats (exactness is mandatory)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Point2(NamedTuple):
    """A point with exact rational coordinates (lexicographically ordered)."""

    x: Fraction
    y: Fraction


class IntPoint2(NamedTuple):
    """A point with integer coordinates (lexicographically ordered)."""

    x: int
    y: int


def point(x: Rational, y: Rational) -> Point2:
    """Build a :class:`Point2`, coercing both coordinates to Fraction."""
    return Point2(_frac(x), _frac(y))


def as_point(p: Sequence[Rational]) -> Point2:
    """Coerce any (x, y) pair — including an IntPoint2 — to a Point2."""
    return Point2(_frac(p[0]), _frac(p[1]))


class Turn(Enum):
    """Orientation of an ordered point triple."""

    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


def _cross_parts(o: Sequence[Rational], a: Sequence[Rational], b: Sequence[Rational]) -> Tuple[int, int]:
    """(num, den) with den > 0 representing the cross product (a - o) x (b - o).

    Works on numerator/denominator pairs directly so that sign tests need no
    Fraction normalization (ints expose .numerator/.denominator too).
    """
    oxn, oxd = o[0].numerator, o[0].denominator
    oyn, oyd = o[1].numerator, o[1].denominator
    n1 = a[0].numerator * oxd - oxn * a[0].denominator  # a.x - o.x, den d1
    d1 = a[0].denominator * oxd
    n2 = b[1].numerator * oyd - oyn * b[1].denominator  # b.y - o.y, den d2
    d2 = b[1].denominator * oyd
    n3 = a[1].numerator * oyd - oyn * a[1].denominator  # a.y - o.y, den d3
    d3 = a[1].denominator * oyd
    n4 = b[0].numerator * oxd - oxn * b[0].denominator  # b.x - o.x, den d4
    d4 = b[0].denominator * oxd
    return n1 * n2 * d3 * d4 - n3 * n4 * d1 * d2, d1 * d2 * d3 * d4


def cross(o: Sequence[Rational], a: Sequence[Rational], b: Sequence[Rational]):
    """Exact cross product (a - o) x (b - o)."""
    num, den = _cross_parts(o, a, b)
    if den == 1:
        return num
    return Fraction(num, den)


def orient(p: Sequence[Rational], q: Sequence[Rational], r: Sequence[Rational]) -> Turn:
    """Classify the turn p -> q -> r; LEFT means the cross product is positive."""
    s = _cross_parts(p, q, r)[0]
    if s > 0:
        return Turn.LEFT
    if s < 0:
        return Turn.RIGHT
    return Turn.COLLINEAR


def _eval_cmp(a: int, c: int, b: Fraction, p: Sequence[Rational]) -> int:
    """Sign of a*p.x + c*p.y - b in pure integer arithmetic."""
    xn, xd = p[0].numerator, p[0].denominator
    yn, yd = p[1].numerator, p[1].denominator
    diff = (a * xn * yd + c * yn * xd) * b.denominator - b.numerator * xd * yd
    if diff > 0:
        return 1
    if diff < 0:
        return -1
    return 0


@dataclass(frozen=True)
class Line:
    """The line a*x + c*y = b, canonically normalized.

    Invariants (established on construction): (a, c) != (0, 0), integers with
    gcd(a, c) == 1, and a > 0 or (a == 0 and c > 0).  b is rational, so lines
    that carry no integer points are representable; this line has integer
    points iff b is an integer.
    """

    a: int
    c: int
    b: Fraction

    def __post_init__(self) -> None:
        a, c = self.a, self.c
        if not isinstance(a, int) or not isinstance(c, int):
            raise TypeError("line normal coefficients must be integers")
        if a == 0 and c == 0:
            raise ValueError("line normal must be nonzero")
        b = _frac(self.b)
        g = gcd(abs(a), abs(c))
        a //= g
        c //= g
        b = b / g
        if a < 0 or (a == 0 and c < 0):
            a, c, b = -a, -c, -b
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "b", b)

    def eval_at(self, p: Sequence[Rational]) -> Fraction:
        """The linear form a*x + c*y at p."""
        return self.a * _frac(p[0]) + self.c * _frac(p[1])

    def contains_point(self, p: Sequence[Rational]) -> bool:
        return _eval_cmp(self.a, self.c, self.b, p) == 0


@dataclass(frozen=True)
class HalfPlane:
    """The closed half-plane a*x + c*y <= b.

    (a, c) are reduced to coprime integers but the sign is preserved: the
    normal (a, c) points away from the feasible side.  b is rational.
    """

    a: int
    c: int
    b: Fraction

    def __post_init__(self) -> None:
        a, c = self.a, self.c
        if not isinstance(a, int) or not isinstance(c, int):
            raise TypeError("half-plane coefficients must be integers")
        if a == 0 and c == 0:
            raise ValueError("half-plane normal must be nonzero")
        b = _frac(self.b)
        g = gcd(abs(a), abs(c))
        object.__setattr__(self, "a", a // g)
        object.__setattr__(self, "c", c // g)
        object.__setattr__(self, "b", b / g)

    def line(self) -> Line:
        """The boundary line (canonically normalized)."""
        return Line(self.a, self.c, self.b)

    def eval_at(self, p: Sequence[Rational]) -> Fraction:
        return self.a * _frac(p[0]) + self.c * _frac(p[1])

    def contains_point(self, p: Sequence[Rational]) -> bool:
        return _eval_cmp(self.a, self.c, self.b, p) <= 0


@dataclass(frozen=True)
class Segment:
    """A closed segment; p == q is allowed and means a single point."""

    p: Point2
    q: Point2


@dataclass(frozen=True)
class HullResult:
    """Canonical list of integer hull vertices.

    Forms: empty; one point; two points in lexicographic order; or three or
    more points in strictly convex counter-clockwise order starting at the
    lexicographically smallest point.
    """

    points: Tuple[IntPoint2, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(IntPoint2(int(p[0]), int(p[1])) for p in self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]


@dataclass(frozen=True)
class PolySet2:
    """A polyhedral subset of the plane in both representations.

    With >= 3 vertices: ``vertices`` is a strictly convex CCW cycle starting
    at the lex-smallest vertex and ``halfplanes[i]`` supports the edge
    ``vertices[i] -> vertices[(i+1) % n]``.  With 1 or 2 vertices the set is
    degenerate (a point or a segment, vertices in lex order) and carries no
    half-planes.  ``rays`` is carried through for callers that track
    recession directions; hull computations require it to be empty.
    """

    halfplanes: Tuple[HalfPlane, ...]
    vertices: Tuple[Point2, ...]
    rays: Tuple[Tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self) -> None:
        hps = tuple(self.halfplanes)
        verts = tuple(Point2(_frac(p[0]), _frac(p[1])) for p in self.vertices)
        rays = tuple((_frac(r[0]), _frac(r[1])) for r in self.rays)
        object.__setattr__(self, "halfplanes", hps)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "rays", rays)
        n = len(verts)
        if n == 0:
            raise ValueError("a PolySet2 must have at least one vertex; use None for the empty set")
        if n <= 2:
            if hps:
                raise ValueError("degenerate sets carry no half-planes")
            if n == 2 and not verts[0] < verts[1]:
                raise ValueError("degenerate segment vertices must be distinct and in lex order")
            return
        if len(hps) != n:
            raise ValueError("need exactly one half-plane per edge")
        if min(verts) != verts[0]:
            raise ValueError("vertex cycle must start at the lexicographically smallest vertex")
        for i in range(n):
            p = verts[i]
            q = verts[(i + 1) % n]
            r = verts[(i + 2) % n]
            if _cross_parts(p, q, r)[0] <= 0:
                raise ValueError("vertices must form a strictly convex counter-clockwise cycle")
            h = hps[i]
            if _eval_cmp(h.a, h.c, h.b, p) != 0 or _eval_cmp(h.a, h.c, h.b, q) != 0:
                raise ValueError("halfplanes[i] must be tight on edge i")
            if _eval_cmp(h.a, h.c, h.b, r) >= 0:
                raise ValueError("halfplanes[i] must contain the polygon")

    @property
    def is_degenerate(self) -> bool:
        """True for a point or segment (fewer than 3 vertices)."""
        return len(self.vertices) < 3


def line_through(p: Sequence[Rational], q: Sequence[Rational]) -> Line:
    """The unique line through two distinct points."""
    p = as_point(p)
    q = as_point(q)
    if p == q:
        raise IdenticalPoints(f"cannot build a line through the single point {tuple(p)}")
    dx = q.x - p.x
    dy = q.y - p.y
    scale = dx.denominator * dy.denominator
    a = int(dy * scale)
    c = int(-dx * scale)
    return Line(a, c, a * p.x + c * p.y)


def intersect_lines(l1: Line, l2: Line) -> Point2:
    """The intersection point of two non-parallel lines."""
    det = l1.a * l2.c - l2.a * l1.c
    if det == 0:
        if l1 == l2:
            raise CoincidentLines(f"lines are equal: {l1}")
        raise ParallelLines(f"lines are parallel and distinct: {l1}, {l2}")
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l1.a * l2.b - l2.a * l1.b) / det
    return Point2(_frac(x), _frac(y))


def _hull_chain(points: Iterable[Sequence]) -> list:
    """Monotone-chain convex hull over exactly comparable (x, y) pairs.

    Returns the hull in strict CCW order starting at the lexicographically
    smallest point.  Fewer than three distinct points (or an all-collinear
    set) collapse to the sorted distinct points / the two extreme points.
    """
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross_parts(lower[-2], lower[-1], p)[0] <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross_parts(upper[-2], upper[-1], p)[0] <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        # All points collinear: keep the two extremes.
        return [pts[0], pts[-1]]
    return hull


def convex_hull(points: Iterable[Sequence[int]]) -> HullResult:
    """Canonical convex hull of a finite set of integer points."""
    pts = [IntPoint2(int(p[0]), int(p[1])) for p in points]
    return HullResult(tuple(IntPoint2(*p) for p in _hull_chain(pts)))


def sort_points_ccw(points: Sequence[Sequence[Rational]]) -> list:
    """Sort points in convex position counter-clockwise from the lex-smallest.

    Raises :class:`NotConvexPosition` when some point is strictly inside the
    hull of the others, when fewer than three distinct points remain, or when
    all points are collinear.
    """
    pts = [as_point(p) for p in points]
    distinct = set(pts)
    if len(distinct) < 3:
        raise NotConvexPosition("need at least three distinct points")
    hull = _hull_chain(distinct)
    if len(hull) < 3:
        raise NotConvexPosition("points are collinear")
    if len(hull) < len(distinct):
        raise NotConvexPosition("some points lie inside the hull of the others")
    return [Point2(*p) for p in hull]


def _edge_halfplane(p: Point2, q: Point2) -> HalfPlane:
    """Supporting half-plane of the directed edge p -> q of a CCW polygon.

    The outward normal of a CCW edge with direction d is (d.y, -d.x).
    """
    pxn, pxd = p.x.numerator, p.x.denominator
    pyn, pyd = p.y.numerator, p.y.denominator
    dxn = q.x.numerator * pxd - pxn * q.x.denominator  # q.x - p.x, den q.xd*pxd
    dyn = q.y.numerator * pyd - pyn * q.y.denominator  # q.y - p.y, den q.yd*pyd
    a = dyn * (q.x.denominator * pxd)
    c = -dxn * (q.y.denominator * pyd)
    b = Fraction(a * pxn * pyd + c * pyn * pxd, pxd * pyd)
    return HalfPlane(a, c, b)


def _polyset_from_cycle(verts: Sequence[Point2]) -> PolySet2:
    """Build a PolySet2 from a strictly convex CCW cycle (>= 3 vertices).

    Rotates the cycle to start at the lex-smallest vertex and derives one
    half-plane per edge.
    """
    verts = list(verts)
    k = verts.index(min(verts))
    verts = verts[k:] + verts[:k]
    n = len(verts)
    hps = tuple(_edge_halfplane(verts[i], verts[(i + 1) % n]) for i in range(n))
    return PolySet2(hps, tuple(verts))


def _degenerate_polyset(points: Iterable[Point2]) -> Optional[PolySet2]:
    """A point or segment PolySet2 from <= 2 distinct points (None if empty)."""
    distinct = sorted(set(as_point(p) for p in points))
    if not distinct:
        return None
    if len(distinct) > 2:
        raise ValueError("degenerate sets have at most two distinct vertices")
    return PolySet2((), tuple(distinct))


def polyset_from_vertices(vertices: Sequence[Sequence[Rational]]) -> PolySet2:
    """The convex polygon spanned by the given points.

    Points strictly inside the hull of the others are dropped.  Raises
    :class:`DegenerateSet` when fewer than three distinct points remain or all
    points are collinear.
    """
    pts = [as_point(p) for p in vertices]
    hull = _hull_chain(pts)
    if len(hull) < 3:
        raise DegenerateSet("need at least three distinct, not all collinear points")
    return _polyset_from_cycle([Point2(*p) for p in hull])


def contains(P: PolySet2, p: Sequence[Rational]) -> bool:
    """Boundary-inclusive membership test."""
    p = as_point(p)
    verts = P.vertices
    if len(verts) == 1:
        return p == verts[0]
    if len(verts) == 2:
        u, w = verts
        if _cross_parts(u, w, p)[0] != 0:
            return False
        return min(u, w) <= p <= max(u, w)
    return all(_eval_cmp(h.a, h.c, h.b, p) <= 0 for h in P.halfplanes)


def area(P: PolySet2) -> Fraction:
    """Exact area (0 for degenerate sets)."""
    verts = P.vertices
    if len(verts) < 3:
        return Fraction(0)
    twice = Fraction(0)
    n = len(verts)
    for i in range(n):
        p = verts[i]
        q = verts[(i + 1) % n]
        # p.x*q.y - q.x*p.y over one common denominator per term.
        num = (
            p.x.numerator * q.y.numerator * q.x.denominator * p.y.denominator
            - q.x.numerator * p.y.numerator * p.x.denominator * q.y.denominator
        )
        den = p.x.denominator * q.y.denominator * q.x.denominator * p.y.denominator
        twice += Fraction(num, den)
    return twice / 2


def bounding_box(P: PolySet2) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """(xmin, xmax, ymin, ymax) over the vertices."""
    xs = [v.x for v in P.vertices]
    ys = [v.y for v in P.vertices]
    return min(xs), max(xs), min(ys), max(ys)


def _clean_cycle(points: Sequence[Point2]) -> list:
    """Drop consecutive duplicates and collinear middle vertices of a cycle."""
    out = list(points)
    # Consecutive duplicates (cyclically).
    dedup: list = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    while len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    # Collinear middles (cyclically); the loop re-scans until stable.
    changed = True
    while changed and len(dedup) >= 3:
        changed = False
        n = len(dedup)
        for i in range(n):
            a = dedup[(i - 1) % n]
            b = dedup[i]
            c = dedup[(i + 1) % n]
            if _cross_parts(a, b, c)[0] == 0:
                del dedup[i]
                changed = True
                break
    return dedup


def _clip_degenerate(P: PolySet2, h: HalfPlane) -> Optional[PolySet2]:
    """Clip a point or segment by a half-plane."""
    verts = P.vertices
    if len(verts) == 1:
        return P if h.contains_point(verts[0]) else None
    u, w = verts
    fu = h.eval_at(u)
    fw = h.eval_at(w)
    if fu <= h.b and fw <= h.b:
        return P
    if fu > h.b and fw > h.b:
        return None
    # The boundary line crosses the segment strictly once.
    t = (h.b - fu) / (fw - fu)
    m = Point2(u.x + t * (w.x - u.x), u.y + t * (w.y - u.y))
    kept = u if fu <= h.b else w
    return _degenerate_polyset([kept, m])


def clip(P: PolySet2, h: HalfPlane) -> Optional[PolySet2]:
    """P intersected with a half-plane; None when the intersection is empty.

    Degenerate results (a segment or point) are returned as degenerate
    PolySet2 values, not errors.
    """
    if P.is_degenerate:
        return _clip_degenerate(P, h)
    verts = P.vertices
    n = len(verts)
    signs = [_eval_cmp(h.a, h.c, h.b, v) for v in verts]
    out: list = []
    for i in range(n):
        j = (i + 1) % n
        cur, nxt = verts[i], verts[j]
        sc, sn = signs[i], signs[j]
        if sc <= 0:
            out.append(cur)
        if sc * sn < 0:
            fc = h.eval_at(cur)
            fn = h.eval_at(nxt)
            t = (h.b - fc) / (fn - fc)
            out.append(Point2(cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)))
    cycle = _clean_cycle(out)
    if not cycle:
        return None
    if len(cycle) < 3:
        return _degenerate_polyset(cycle)
    # A convex cycle can degenerate to a segment even with 3+ corners kept
    # when all survivors are collinear; _clean_cycle already removed that.
    return _polyset_from_cycle(cycle)


# ---------------------------------------------------------------------------
# Intersection of half-planes
# ---------------------------------------------------------------------------


def _dedupe_halfplanes(hps: Sequence[HalfPlane]) -> list:
    """Keep the tightest offset per normal direction."""
    best = {}
    for h in hps:
        key = (h.a, h.c)
        if key not in best or h.b < best[key].b:
            best[key] = h
    return list(best.values())


def _sort_by_angle(hps: Sequence[HalfPlane]) -> list:
    """Sort half-planes by the angle of their normal; exact (no trigonometry).

    Normals are compared by half of the plane first (angles in [0, pi) before
    [pi, 2*pi)), then by cross product within a half.
    """
    import functools

    def half(h: HalfPlane) -> int:
        return 0 if (h.c > 0 or (h.c == 0 and h.a > 0)) else 1

    def cmp(h1: HalfPlane, h2: HalfPlane) -> int:
        k1, k2 = half(h1), half(h2)
        if k1 != k2:
            return -1 if k1 < k2 else 1
        cr = h1.a * h2.c - h1.c * h2.a
        if cr > 0:
            return -1
        if cr < 0:
            return 1
        return 0

    return sorted(hps, key=functools.cmp_to_key(cmp))


def _positively_spanning(sorted_hps: Sequence[HalfPlane]) -> bool:
    """True iff every cyclic gap between consecutive normals is < pi."""
    n = len(sorted_hps)
    if n < 3:
        return False
    for i in range(n):
        h1 = sorted_hps[i]
        h2 = sorted_hps[(i + 1) % n]
        if h1.a * h2.c - h1.c * h2.a <= 0:
            return False
    return True


def _feasible_1d(lows: list, highs: list) -> bool:
    """Is there y with max(lows) <= y <= min(highs)? (Empty lists are +-inf.)"""
    if lows and highs:
        return max(lows) <= min(highs)
    return True


def _fourier_motzkin_feasible(hps: Sequence[HalfPlane]) -> bool:
    """Exact feasibility of a*x + c*y <= b system by eliminating x."""
    uppers = []  # x <= (b - c*y)/a, a > 0
    lowers = []  # x >= (b - c*y)/a, a < 0
    pure = []  # c*y <= b
    for h in hps:
        if h.a > 0:
            uppers.append(h)
        elif h.a < 0:
            lowers.append(h)
        else:
            pure.append(h)
    y_low: list = []
    y_high: list = []

    def add_y_constraint(coef: Fraction, bound: Fraction) -> bool:
        # coef * y <= bound
        if coef > 0:
            y_high.append(bound / coef)
        elif coef < 0:
            y_low.append(bound / coef)
        elif bound < 0:
            return False
        return True

    for h in pure:
        if not add_y_constraint(Fraction(h.c), h.b):
            return False
    for hu in uppers:
        for hl in lowers:
            # (b_l - c_l*y)/a_l <= x <= (b_u - c_u*y)/a_u with a_u > 0 > a_l.
            # Cross-multiplying by a_u * (-a_l) > 0:
            coef = Fraction(hu.c * (-hl.a) + hl.c * hu.a)
            bound = hu.b * (-hl.a) + hl.b * hu.a
            if not add_y_constraint(coef, bound):
                return False
    return _feasible_1d(y_low, y_high)


class _NeedsFallback(Exception):
    """Internal: the fast half-plane intersection hit an ambiguous case."""


def _hp_intersection_point(h1: HalfPlane, h2: HalfPlane) -> Point2:
    det = h1.a * h2.c - h2.a * h1.c
    if det == 0:
        raise _NeedsFallback
    x = (h1.b * h2.c - h2.b * h1.c) / det
    y = (h1.a * h2.b - h2.a * h1.b) / det
    return Point2(_frac(x), _frac(y))


def _intersect_by_clipping(hps: Sequence[HalfPlane]) -> Optional[PolySet2]:
    """Intersect bounded-shaped half-planes by clipping a large box.

    Every vertex of the feasible region is the intersection of two input
    boundary lines, whose coordinates are bounded by 2 * max|b| * max|coef|
    because the 2x2 determinant of coprime integer rows is a nonzero integer.
    The box is strictly larger, so box edges never survive into the result.
    """
    max_b = max(abs(h.b) for h in hps)
    max_ac = max(max(abs(h.a), abs(h.c)) for h in hps)
    m = 1 + 2 * (max_b.numerator // max_b.denominator + 1) * max_ac
    square = _polyset_from_cycle(
        [point(-m, -m), point(m, -m), point(m, m), point(-m, m)]
    )
    region: Optional[PolySet2] = square
    for h in hps:
        region = clip(region, h)
        if region is None:
            return None
    return region


def _intersect_sorted_deque(sorted_hps: Sequence[HalfPlane]) -> Optional[PolySet2]:
    """Half-plane intersection for angle-sorted, positively spanning input.

    Classic deque construction: a half-plane is popped when it becomes
    redundant against the intersection point of its neighbors.  Raises
    :class:`_NeedsFallback` on ambiguous degenerate configurations (handled
    by the slower clipping path).
    """
    def outside(h: HalfPlane, p: Point2) -> bool:
        return h.eval_at(p) > h.b

    dq: list = []
    for h in sorted_hps:
        while len(dq) >= 2 and outside(h, _hp_intersection_point(dq[-2], dq[-1])):
            dq.pop()
        while len(dq) >= 2 and outside(h, _hp_intersection_point(dq[0], dq[1])):
            dq.pop(0)
        if dq:
            back = dq[-1]
            det = back.a * h.c - h.a * back.c
            if det == 0:
                if back.a * h.a + back.c * h.c > 0:
                    # Same direction; keep the tighter one.
                    if h.b < back.b:
                        dq.pop()
                    else:
                        continue
                else:
                    # Antiparallel neighbors: empty slab means empty set,
                    # anything else is ambiguous here.
                    if back.b + h.b < 0:
                        return None
                    raise _NeedsFallback
        dq.append(h)
    while len(dq) >= 3 and outside(dq[0], _hp_intersection_point(dq[-2], dq[-1])):
        dq.pop()
    while len(dq) >= 3 and outside(dq[-1], _hp_intersection_point(dq[0], dq[1])):
        dq.pop(0)
    if len(dq) < 3:
        raise _NeedsFallback
    pts = []
    n = len(dq)
    for i in range(n):
        pts.append(_hp_intersection_point(dq[i], dq[(i + 1) % n]))
    cycle = _clean_cycle(pts)
    if len(cycle) < 3:
        return _degenerate_polyset(cycle)
    return _polyset_from_cycle(cycle)


_DEQUE_MIN_SIZE = 64


def _intersect_halfplanes(hps: Sequence[HalfPlane]) -> Optional[PolySet2]:
    """Permissive intersection: PolySet2 (possibly degenerate) or None.

    Raises :class:`UnboundedSet` when the (nonempty) intersection is
    unbounded.  Callers that must reject degenerate output wrap this.
    """
    filtered = []
    for h in hps:
        filtered.append(HalfPlane(h.a, h.c, h.b) if not isinstance(h, HalfPlane) else h)
    deduped = _dedupe_halfplanes(filtered)
    if not deduped:
        raise UnboundedSet("no constraints: the whole plane is unbounded")
    sorted_hps = _sort_by_angle(deduped)
    if not _positively_spanning(sorted_hps):
        if _fourier_motzkin_feasible(deduped):
            raise UnboundedSet("the intersection has a recession direction")
        return None
    if len(sorted_hps) >= _DEQUE_MIN_SIZE:
        try:
            return _intersect_sorted_deque(sorted_hps)
        except _NeedsFallback:
            pass
    return _intersect_by_clipping(sorted_hps)


def polyset_from_halfplanes(hps: Sequence[HalfPlane]) -> PolySet2:
    """The bounded 2D set defined by the half-planes.

    Raises :class:`EmptySet` for an empty intersection, :class:`UnboundedSet`
    for an unbounded one, and :class:`DegenerateSet` when the intersection is
    a point or segment.  Redundant half-planes are dropped.
    """
    result = _intersect_halfplanes(hps)
    if result is None:
        raise EmptySet("the half-plane intersection is empty")
    if result.is_degenerate:
        raise DegenerateSet("the half-plane intersection has no interior (a point or segment)")
    return result
