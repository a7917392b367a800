"""Exception hierarchy for the inthull package.

Every error raised by the library derives from :class:`GeometryError`, so
callers can catch one base class at API boundaries (the CLI does exactly
that).  Subclasses distinguish the handful of conditions a caller may want
to branch on: degenerate input geometry, empty or unbounded feasible sets,
and resource-limit overruns.
"""

from __future__ import annotations


class GeometryError(Exception):
    """Base class for all errors raised by this package."""


class IdenticalPoints(GeometryError):
    """Two distinct points were required but the same point was given twice."""


class ParallelLines(GeometryError):
    """Two lines have no intersection point because their normals are parallel."""


class CoincidentLines(GeometryError):
    """Two lines are equal as point sets, so their intersection is not a point."""


class NotConvexPosition(GeometryError):
    """A point set expected to be in convex position has interior points."""


class DegenerateSet(GeometryError):
    """A polyhedral set is empty or has no interior (a point or a segment)."""


class EmptySet(GeometryError):
    """A polyhedral set, or its set of integer points, is empty."""


class UnboundedSet(GeometryError):
    """A polyhedral set is unbounded where a bounded one is required."""


class SegmentNotOnLine(GeometryError):
    """A segment's endpoints do not both lie on the given line."""


class NoIntegerPoints(GeometryError):
    """A line or chord contains no integer points."""


class BudgetExceeded(GeometryError):
    """An enumeration exceeded its configured cell budget."""


class SweepLimitExceeded(GeometryError):
    """A sweep exceeded its configured maximum number of offsets."""


class InvalidInstance(GeometryError):
    """An instance file failed parsing or schema validation."""
