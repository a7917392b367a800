"""Lattice machinery for lines and chord sweeps.

This module answers the discrete questions both hull engines are built on:

* which lines ``a*x + c*y = b`` contain integer points, and how to enumerate
  them (:func:`egcd`, :func:`lattice_of_line`, :func:`integer_points_on_chord`);
* given a polygon facet, what is the first integer offset — sweeping the
  facet line parallel to itself — whose chord through the polygon contains a
  lattice point (:func:`sweep_inward` from the facet toward the interior,
  :func:`sweep_from_opposite` from the far side toward the facet).

The sweeps are exact but do not step line by line.  Each sweep works in a
unimodular coordinate frame ``t = a*x + c*y``, ``s = -v*x + u*y`` (where
``a*u + c*v = 1``), in which the chord at integer level ``t = T`` carries a
lattice point iff ``floor(s_hi(T)) >= ceil(s_lo(T))``.  The number of lattice
points with ``T`` in a whole window is a sum of ``floor`` terms of linear
rational functions along the polygon's two boundary chains, evaluated in
O(1) per boundary edge by the classic Euclidean-style ``floor_sum``.  A
galloping search over windows then locates the first hit after inspecting
O(log(distance)) windows, so thin polygons whose facets are millions of
integer offsets away from their first lattice chord still sweep quickly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Dict, List, Optional, Tuple, Union

from .errors import NoIntegerPoints, SegmentNotOnLine, SweepLimitExceeded, UnboundedSet
from .geom import (
    IntPoint2,
    Line,
    Point2,
    PolySet2,
    Segment,
    _frac,
)


def egcd(a: int, c: int) -> Tuple[int, int, int]:
    """Extended Euclid: (g, u, v) with g = gcd(|a|, |c|) > 0 and a*u + c*v = g."""
    if a == 0 and c == 0:
        raise ValueError("egcd(0, 0) is undefined")
    sign_a = 1 if a >= 0 else -1
    sign_c = 1 if c >= 0 else -1
    old_r, r = abs(a), abs(c)
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, sign_a * old_s, sign_c * old_t


def floor_sum(n: int, m: int, a: int, b: int) -> int:
    """Sum of floor((a*i + b) / m) for i = 0 .. n-1, with m > 0.

    Runs in O(log) like the Euclidean algorithm; a and b may be negative.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m <= 0:
        raise ValueError("m must be positive")
    ans = 0
    if a < 0:
        a2 = a % m
        ans -= n * (n - 1) // 2 * ((a2 - a) // m)
        a = a2
    if b < 0:
        b2 = b % m
        ans -= n * ((b2 - b) // m)
        b = b2
    while True:
        if a >= m:
            ans += n * (n - 1) // 2 * (a // m)
            a %= m
        if b >= m:
            ans += n * (b // m)
            b %= m
        y_max = a * n + b
        if y_max < m:
            return ans
        n = y_max // m
        b = y_max % m
        m, a = a, m


def line_has_integer_point(l: Line) -> bool:
    """True iff the line carries integer points (with gcd(a, c) = 1: b is integral)."""
    return l.b.denominator == 1


@dataclass(frozen=True)
class LineLattice:
    """All integer points of a line: base + t * dir for integer t.

    dir = (c, -a) is primitive because gcd(a, c) = 1, so consecutive integer
    points on the line differ by exactly one step of dir.
    """

    base: IntPoint2
    dir: Tuple[int, int]


def lattice_of_line(l: Line) -> LineLattice:
    """Parametrize the integer points of a line; raises NoIntegerPoints if none."""
    if l.b.denominator != 1:
        raise NoIntegerPoints(f"line {l.a}*x + {l.c}*y = {l.b} has no integer points")
    b = int(l.b)
    _, u, v = egcd(l.a, l.c)  # gcd is 1 by the Line invariant
    return LineLattice(IntPoint2(u * b, v * b), (l.c, -l.a))


@dataclass(frozen=True)
class SweepHit:
    """The stopping chord of a sweep: its integer offset and the extreme
    lattice points on it (lexicographically ordered, possibly equal)."""

    offset: int
    lo: IntPoint2
    hi: IntPoint2


def integer_points_on_chord(l: Line, seg: Segment) -> Optional[SweepHit]:
    """Extreme integer points of the line within a segment of it (inclusive).

    Returns None when the line carries no integer points or none fall inside
    the segment.  Raises SegmentNotOnLine when an endpoint is off the line.
    """
    if not l.contains_point(seg.p) or not l.contains_point(seg.q):
        raise SegmentNotOnLine("segment endpoints must lie on the line")
    if l.b.denominator != 1:
        return None
    lat = lattice_of_line(l)
    dx, dy = lat.dir

    def param(pt: Point2) -> Fraction:
        if dx:
            return (_frac(pt[0]) - lat.base.x) / dx
        return (_frac(pt[1]) - lat.base.y) / dy

    t1, t2 = sorted((param(seg.p), param(seg.q)))
    t_lo, t_hi = ceil(t1), floor(t2)
    if t_lo > t_hi:
        return None
    p1 = IntPoint2(lat.base.x + t_lo * dx, lat.base.y + t_lo * dy)
    p2 = IntPoint2(lat.base.x + t_hi * dx, lat.base.y + t_hi * dy)
    lo, hi = sorted((p1, p2))
    return SweepHit(int(l.b), lo, hi)


def chord(P: PolySet2, l: Line) -> Union[Segment, Point2, None]:
    """P intersected with a line: a segment, a single point, or None."""
    d = (l.c, -l.a)
    p0 = Point2(Fraction(0), l.b / l.c) if l.c else Point2(l.b / l.a, Fraction(0))
    if P.is_degenerate:
        return _chord_of_degenerate(P, l)
    if P.rays:
        raise UnboundedSet("chords are only defined for bounded sets")
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for h in P.halfplanes:
        coef = h.a * d[0] + h.c * d[1]
        rhs = h.b - h.eval_at(p0)
        if coef == 0:
            if rhs < 0:
                return None
        elif coef > 0:
            bound = rhs / coef
            hi = bound if hi is None or bound < hi else hi
        else:
            bound = rhs / coef
            lo = bound if lo is None or bound > lo else lo
    # A bounded polygon clips the line on both sides.
    assert lo is not None and hi is not None
    if lo > hi:
        return None
    if lo == hi:
        return Point2(p0.x + lo * d[0], p0.y + lo * d[1])
    a_pt = Point2(p0.x + lo * d[0], p0.y + lo * d[1])
    b_pt = Point2(p0.x + hi * d[0], p0.y + hi * d[1])
    p, q = sorted((a_pt, b_pt))
    return Segment(p, q)


def _chord_of_degenerate(P: PolySet2, l: Line) -> Union[Segment, Point2, None]:
    verts = P.vertices
    if len(verts) == 1:
        return verts[0] if l.contains_point(verts[0]) else None
    u, w = verts
    fu, fw = l.eval_at(u), l.eval_at(w)
    if fu == l.b and fw == l.b:
        return Segment(u, w)
    if (fu < l.b < fw) or (fw < l.b < fu):
        t = (l.b - fu) / (fw - fu)
        return Point2(u.x + t * (w.x - u.x), u.y + t * (w.y - u.y))
    if fu == l.b:
        return u
    if fw == l.b:
        return w
    return None


# ---------------------------------------------------------------------------
# Facet sweeps
# ---------------------------------------------------------------------------


class _Frame:
    """Unimodular coordinates aligned with an integer direction (A, C).

    t = A*x + C*y, s = -v*x + u*y where A*u + C*v = 1.  The matrix has
    determinant +1, so counter-clockwise orientation is preserved and the
    inverse is x = u*t - C*s, y = v*t + A*s; integer (t, s) pairs correspond
    exactly to integer (x, y) points.
    """

    def __init__(self, P: PolySet2, A: int, C: int) -> None:
        g, u, v = egcd(A, C)
        if g != 1:
            raise ValueError("sweep direction must be a primitive integer vector")
        self.P = P
        self.n = len(P.vertices)
        self.A, self.C, self.u, self.v = A, C, u, v
        self._tp: Dict[int, Tuple[int, int]] = {}
        self._sp: Dict[int, Tuple[int, int]] = {}
        self._edge: Dict[Tuple[int, int], Tuple[int, int, int]] = {}

    def t_pair(self, j: int) -> Tuple[int, int]:
        """t at vertex j as (num, den) with den > 0 (no Fraction churn)."""
        val = self._tp.get(j)
        if val is None:
            p = self.P.vertices[j]
            xn, xd = p.x.numerator, p.x.denominator
            yn, yd = p.y.numerator, p.y.denominator
            val = (self.A * xn * yd + self.C * yn * xd, xd * yd)
            self._tp[j] = val
        return val

    def s_pair(self, j: int) -> Tuple[int, int]:
        """s at vertex j as (num, den) with den > 0."""
        val = self._sp.get(j)
        if val is None:
            p = self.P.vertices[j]
            xn, xd = p.x.numerator, p.x.denominator
            yn, yd = p.y.numerator, p.y.denominator
            val = (-self.v * xn * yd + self.u * yn * xd, xd * yd)
            self._sp[j] = val
        return val

    def point_at(self, t: int, s: int) -> IntPoint2:
        return IntPoint2(self.u * t - self.C * s, self.v * t + self.A * s)

    def edge_line(self, j: int, k: int) -> Tuple[int, int, int]:
        """Integer (p, q, r), r > 0, with s = (p*t + q)/r on edge j -> k."""
        key = (j, k)
        cached = self._edge.get(key)
        if cached is None:
            tn0, td0 = self.t_pair(j)
            sn0, sd0 = self.s_pair(j)
            tn1, td1 = self.t_pair(k)
            sn1, sd1 = self.s_pair(k)
            # slope = (s1 - s0) / (t1 - t0) = sn / sd
            sn = (sn1 * sd0 - sn0 * sd1) * td1 * td0
            sd = (tn1 * td0 - tn0 * td1) * sd1 * sd0
            # s(T) = slope*T + (s0 - slope*t0), over common denominator r_raw
            p_raw = sn * sd0 * td0
            q_raw = sn0 * sd * td0 - sn * tn0 * sd0
            r_raw = sd * sd0 * td0
            if r_raw < 0:
                p_raw, q_raw, r_raw = -p_raw, -q_raw, -r_raw
            g = gcd(gcd(abs(p_raw), abs(q_raw)), r_raw)
            cached = (p_raw // g, q_raw // g, r_raw // g)
            self._edge[key] = cached
        return cached


def _min_pair(frame: _Frame, hint: int = 0, negate: bool = False) -> Tuple[int, int, Tuple[int, int]]:
    """Locate the minimum face of t = A*x + C*y (or -t with `negate`) over
    the polygon's vertex cycle.

    Returns (j_lo, j_hi, (min_num, min_den)) where j_lo is the *last*
    minimizing vertex in CCW order and j_hi the first (j_lo == j_hi unless
    the minimum face is an edge parallel to the sweep direction).  The walk
    is a local descent, valid because the functional is unimodal on a convex
    cycle; the hint only affects speed, never the result.
    """
    n = frame.n
    sign = -1 if negate else 1

    def val(j: int) -> Tuple[int, int]:
        num, den = frame.t_pair(j % n)
        return sign * num, den

    def less(x: Tuple[int, int], y: Tuple[int, int]) -> bool:
        return x[0] * y[1] < y[0] * x[1]

    j = hint % n
    fj = val(j)
    for _ in range(n):
        k = (j + 1) % n
        fk = val(k)
        if less(fk, fj):
            j, fj = k, fk
        else:
            break
    for _ in range(n):
        k = (j - 1) % n
        fk = val(k)
        if less(fk, fj):
            j, fj = k, fk
        else:
            break
    nxt = val((j + 1) % n)
    if not less(fj, nxt) and not less(nxt, fj):
        j = (j + 1) % n
    j_lo = j
    prv = val((j - 1) % n)
    j_hi = (j - 1) % n if (not less(fj, prv) and not less(prv, fj)) else j
    return j_lo, j_hi, val(j_lo)


def _chain_pieces(
    frame: _Frame, anchor: int, step: int, t_first: int, t_last: int
) -> List[Tuple[int, int, int, int, int]]:
    """Linear pieces of one boundary chain covering integers in [t_first, t_last].

    The chain starts at `anchor` (whose t-value is <= t_first) and proceeds
    by `step` (+1 CCW, -1 CW) with strictly increasing t.  Returns tuples
    (Ta, Tb, p, q, r) so that s(T) = (p*T + q)/r for every integer
    T in [Ta, Tb]; the ranges partition [t_first, t_last] in ascending order.
    """
    pieces: List[Tuple[int, int, int, int, int]] = []
    j = anchor
    tjn, tjd = frame.t_pair(j)
    t_cur = t_first
    while t_cur <= t_last:
        k = (j + step) % frame.n
        tkn, tkd = frame.t_pair(k)
        assert tkn * tjd > tjn * tkd, "boundary chain must strictly ascend"
        if tkn < t_cur * tkd:  # tk < t_cur
            j, tjn, tjd = k, tkn, tkd
            continue
        # tk >= t_cur and t_cur is an integer, hence floor(tk) >= t_cur.
        t_end = min(t_last, tkn // tkd)
        p, q, r = frame.edge_line(j, k)
        pieces.append((t_cur, t_end, p, q, r))
        t_cur = t_end + 1
    return pieces


def _piece_value(pieces: List[Tuple[int, int, int, int, int]], t: int) -> Fraction:
    """The chain's s-value at integer level t (from materialized pieces)."""
    for ta, tb, p, q, r in pieces:
        if ta <= t <= tb:
            return Fraction(p * t + q, r)
    raise AssertionError("level outside the materialized sweep range")


def _count_slab(
    upper: List[Tuple[int, int, int, int, int]],
    lower: List[Tuple[int, int, int, int, int]],
    t0: int,
    t1: int,
    *,
    stop_at_first: bool = False,
) -> int:
    """Number of lattice points of P whose t-coordinate lies in [t0, t1].

    `upper`/`lower` are materialized chain pieces covering [t0, t1].  The
    count is accumulated per maximal subrange on which both chains are single
    linear pieces; each subrange contributes
    sum(floor(s_hi(T)) - ceil(s_lo(T)) + 1) over its integer levels T, which
    is nonnegative (every chord in the polygon's t-range is nonempty).  With
    ``stop_at_first`` the scan returns at the first nonzero subrange — all
    the sweep's window tests need is positivity.
    """
    total = 0
    iu = il = 0
    t = t0
    while t <= t1:
        while upper[iu][1] < t:
            iu += 1
        while lower[il][1] < t:
            il += 1
        _ua, ub, up, uq, ur = upper[iu]
        _la, lb, lp, lq, lr = lower[il]
        end = min(t1, ub, lb)
        width = end - t + 1
        sub = (
            width
            + floor_sum(width, ur, up, up * t + uq)
            + floor_sum(width, lr, -lp, -(lp * t) - lq)
        )
        assert sub >= 0
        total += sub
        if total and stop_at_first:
            return total
        t = end + 1
    return total


def _slab_has_point(
    upper: List[Tuple[int, int, int, int, int]],
    lower: List[Tuple[int, int, int, int, int]],
    t0: int,
    t1: int,
) -> bool:
    """Whether any chord at an integer level in [t0, t1] has a lattice point."""
    return _count_slab(upper, lower, t0, t1, stop_at_first=True) > 0


@dataclass
class _SweepOutcome:
    hit: Optional[SweepHit]
    steps: int  # integer offsets between the sweep start and the stop (inclusive)
    anchor_min: int  # a vertex minimizing the swept functional
    anchor_max: int  # a vertex maximizing it


def _first_lattice_chord(
    P: PolySet2,
    A: int,
    C: int,
    *,
    negate_offset: bool = False,
    hint_lo: int = 0,
    hint_hi: int = 0,
    max_sweep: Optional[int] = None,
) -> _SweepOutcome:
    """First integer level T of A*x + C*y (scanning upward from the minimum)
    whose chord through P contains a lattice point.

    Returns the hit with its extreme lattice points, or hit=None when no
    chord in the polygon's range contains one (then P has no lattice points
    at all, since every lattice point of P lies on some integer-level chord).
    """
    frame = _Frame(P, A, C)
    j_lo, j_hi, (min_num, min_den) = _min_pair(frame, hint_lo)
    k_lo, _k_hi, (negmax_num, negmax_den) = _min_pair(frame, hint_hi, negate=True)
    t_first = -((-min_num) // min_den)  # ceil of the minimum
    t_last = (-negmax_num) // negmax_den  # floor of the maximum

    def guard(steps: int) -> int:
        if max_sweep is not None and steps > max_sweep:
            raise SweepLimitExceeded(
                f"sweep would take {steps} offset translations (limit {max_sweep})"
            )
        return steps

    if t_first > t_last:
        return _SweepOutcome(None, 0, j_lo, k_lo)

    upper = _chain_pieces(frame, j_hi, -1, t_first, t_last)
    lower = _chain_pieces(frame, j_lo, +1, t_first, t_last)

    # Galloping windows, then a binary search inside the first hitting window.
    window_lo = t_first
    width = 1
    while True:
        window_hi = min(t_last, window_lo + width - 1)
        if _slab_has_point(upper, lower, window_lo, window_hi):
            break
        if window_hi == t_last:
            guard(t_last - t_first + 1)
            return _SweepOutcome(None, t_last - t_first + 1, j_lo, k_lo)
        window_lo = window_hi + 1
        width *= 2
    lo, hi = window_lo, window_hi
    while lo < hi:
        mid = (lo + hi) // 2
        if _slab_has_point(upper, lower, window_lo, mid):
            hi = mid
        else:
            lo = mid + 1
    t_star = lo
    steps = guard(t_star - t_first + 1)

    s_lo = _piece_value(lower, t_star)
    s_hi = _piece_value(upper, t_star)
    s_first, s_last = ceil(s_lo), floor(s_hi)
    assert s_first <= s_last, "hit chord must contain a lattice point"
    p1 = frame.point_at(t_star, s_first)
    p2 = frame.point_at(t_star, s_last)
    lo_pt, hi_pt = sorted((p1, p2))
    offset = -t_star if negate_offset else t_star
    return _SweepOutcome(SweepHit(offset, lo_pt, hi_pt), steps, j_lo, k_lo)


def _check_sweepable(P: PolySet2) -> None:
    if P.rays:
        raise UnboundedSet("facet sweeps require a bounded set")
    if len(P.vertices) < 3:
        raise ValueError("facet sweeps require a polygon with at least 3 vertices")


def _run_sweep(
    P: PolySet2,
    facet_index: int,
    inward: bool,
    *,
    max_sweep: Optional[int] = None,
    hint_lo: Optional[int] = None,
    hint_hi: Optional[int] = None,
) -> _SweepOutcome:
    _check_sweepable(P)
    hp = P.halfplanes[facet_index]
    n = len(P.vertices)
    if inward:
        # Maximizing a*x + c*y over the lattice == scanning -a*x - c*y upward.
        a, c = -hp.a, -hp.c
        default_lo, default_hi = facet_index, (facet_index + n // 2) % n
    else:
        a, c = hp.a, hp.c
        default_lo, default_hi = (facet_index + n // 2) % n, facet_index
    return _first_lattice_chord(
        P,
        a,
        c,
        negate_offset=inward,
        hint_lo=default_lo if hint_lo is None else hint_lo,
        hint_hi=default_hi if hint_hi is None else hint_hi,
        max_sweep=max_sweep,
    )


def sweep_inward(P: PolySet2, facet_index: int, *, max_sweep: Optional[int] = None) -> Optional[SweepHit]:
    """Translate facet line `facet_index` toward the interior of P until its
    chord contains a lattice point of P.

    The returned offset is the largest integer b' <= the facet offset whose
    chord P ∩ {a*x + c*y = b'} contains integer points; lo/hi are the extreme
    ones on that chord.  Returns None iff P contains no integer points.
    With ``max_sweep`` set, raises :class:`SweepLimitExceeded` when the
    answer lies more than that many offsets away from the facet.
    """
    return _run_sweep(P, facet_index, inward=True, max_sweep=max_sweep).hit


def sweep_from_opposite(P: PolySet2, facet_index: int, *, max_sweep: Optional[int] = None) -> Optional[SweepHit]:
    """Translate facet line `facet_index` from the opposite side of P toward
    the facet until its chord contains a lattice point of P.

    The returned offset is the smallest integer b' >= the minimum of
    a*x + c*y over P whose chord contains integer points (the lattice minimum
    in the facet direction).  Returns None iff P contains no integer points.
    """
    return _run_sweep(P, facet_index, inward=False, max_sweep=max_sweep).hit
