"""Exact shapes, point-line arrangements, incidence geometry and rule determinacy."""
from .arrangement import (
    EMPTY_ARRANGEMENT,
    Arrangement,
    AxiomReport,
    NotAnArrangementError,
    RawPointLineSet,
    arr_difference,
    arr_intersection,
    arr_union,
    arrangement_of,
    naive_difference,
    naive_intersection,
    naive_union,
    validate,
)
from .determinacy import DeterminacyVerdict, Reason, classify_rule, oracle_determinate_by_triples
from .incidence import (
    Check,
    GeometryClass,
    IncidenceStructure,
    LeviGraph,
    classify,
    incidence_of,
    is_linear_space,
    is_near_linear,
    is_point_line_geometry,
    levi_graph,
)
from .kernel import (
    CoClass,
    DegenerateSegmentError,
    GeometryError,
    IdenticalLinesError,
    InvalidLineError,
    LineEq,
    Point2,
    Rational,
    Segment,
    canonical_line,
    co_classify,
    intersect,
    line_through,
    point_on_line,
)
from .shape import (
    EMPTY_SHAPE,
    AffineMap,
    InvalidTransformError,
    NotMaximalError,
    Shape,
    difference,
    product,
    reduce,
    shape_of,
    shapes_equal,
    sum_,
    transform,
)

__version__ = "0.1.0"
