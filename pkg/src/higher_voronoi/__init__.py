"""Exact order-k Voronoi combinatorics for planar point sets in general position."""

from .bisectors import bisector_segments, e_vector
from .circles import c_vector, circle_order, v_vector_from_circles
from .exact_geom import (
    Circle,
    DegenerateTripleError,
    GeneralPositionError,
    Point,
    SiteSet,
    circumcenter,
    in_circle,
    orientation,
    validate_general_position,
)
from .invariants import CensusReport, central_values, check_all, closed_form_table
from .pointsfile import generate_sites, parse_points
from .poset import (
    build_poset,
    euler_characteristic,
    hasse_edges,
    is_graded,
    is_lattice,
    minimal_upper_bounds,
)
from .regions import (
    HalfPlane,
    f_vector_enumerate,
    feasible,
    halfplane,
    region_full_dimensional,
    region_nonempty,
)
from .unbounded import f_inf_vector, separable

__version__ = "0.1.0"
