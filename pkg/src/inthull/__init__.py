"""inthull — exact integer hulls of bounded 2D rational polyhedral sets.

The package computes the convex hull of the integer points of a bounded
polygon with exact rational arithmetic throughout.  Three engines share one
canonical result type: a facet-sweep engine with recursive refinement
(:func:`integer_hull_new`), a facet-normalization engine with corner
enumeration (:func:`integer_hull_baseline`), and a direct-enumeration
oracle (:func:`integer_hull_oracle`) that defines ground truth.
"""

from .errors import (
    BudgetExceeded,
    CoincidentLines,
    DegenerateSet,
    EmptySet,
    GeometryError,
    IdenticalPoints,
    InvalidInstance,
    NoIntegerPoints,
    NotConvexPosition,
    ParallelLines,
    SegmentNotOnLine,
    SweepLimitExceeded,
    UnboundedSet,
)
from .geom import (
    HalfPlane,
    HullResult,
    IntPoint2,
    Line,
    Point2,
    PolySet2,
    Rational,
    Segment,
    Turn,
    area,
    as_point,
    bounding_box,
    clip,
    contains,
    convex_hull,
    cross,
    intersect_lines,
    line_through,
    orient,
    point,
    polyset_from_halfplanes,
    polyset_from_vertices,
    sort_points_ccw,
)
from .hull_baseline import Partition, integer_hull_baseline, normalize_facets, partition
from .hull_new import (
    CandidateSet,
    RefineConfig,
    brute_force_region,
    integer_hull_new,
    replace_facets,
    residual_regions,
)
from .instances import (
    Instance,
    dump_instance,
    format_decimal,
    format_rational,
    instance_to_polyset,
    load_instance,
    parse_instance,
    parse_rational,
    save_instance,
)
from .lattice import (
    LineLattice,
    SweepHit,
    chord,
    egcd,
    floor_sum,
    integer_points_on_chord,
    lattice_of_line,
    line_has_integer_point,
    sweep_from_opposite,
    sweep_inward,
)
from .oracle import (
    RunStats,
    bbox_cell_count,
    enumerate_integer_points,
    integer_hull_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "GeometryError",
    "IdenticalPoints",
    "ParallelLines",
    "CoincidentLines",
    "NotConvexPosition",
    "DegenerateSet",
    "EmptySet",
    "UnboundedSet",
    "SegmentNotOnLine",
    "NoIntegerPoints",
    "BudgetExceeded",
    "SweepLimitExceeded",
    "InvalidInstance",
    # geometry
    "Rational",
    "Point2",
    "IntPoint2",
    "point",
    "as_point",
    "Turn",
    "cross",
    "orient",
    "Line",
    "HalfPlane",
    "Segment",
    "HullResult",
    "PolySet2",
    "line_through",
    "intersect_lines",
    "convex_hull",
    "sort_points_ccw",
    "polyset_from_vertices",
    "polyset_from_halfplanes",
    "contains",
    "area",
    "bounding_box",
    "clip",
    # lattice
    "egcd",
    "floor_sum",
    "line_has_integer_point",
    "LineLattice",
    "lattice_of_line",
    "SweepHit",
    "integer_points_on_chord",
    "chord",
    "sweep_inward",
    "sweep_from_opposite",
    # engines
    "RefineConfig",
    "CandidateSet",
    "replace_facets",
    "residual_regions",
    "brute_force_region",
    "integer_hull_new",
    "Partition",
    "normalize_facets",
    "partition",
    "integer_hull_baseline",
    "RunStats",
    "bbox_cell_count",
    "enumerate_integer_points",
    "integer_hull_oracle",
    # instances
    "Instance",
    "parse_rational",
    "format_rational",
    "format_decimal",
    "parse_instance",
    "dump_instance",
    "load_instance",
    "save_instance",
    "instance_to_polyset",
]
