"""Exact h*-vectors, order polytopes, chromatic series and their symmetric
decompositions, with an exhaustive/random conjecture-hunting harness.

All arithmetic is exact (arbitrary-precision integers and rationals); no
floating point anywhere.
"""

from .decomp import (
    SymmetricDecomposition,
    ab_decompose,
    graph_decomposition,
    graph_numerator,
    inequality_report,
    open_decomposition,
    order_decomposition,
    stapledon_pair,
)
from .ehrhart import (
    HRepPolytope,
    OrderPolytope,
    Simplex,
    count_points,
    ehrhart_polynomial,
    h_star,
    load_polytope,
    open_numerator,
    parse_polytope,
)
from .errors import (
    BudgetExceeded,
    HstarError,
    InternalConsistencyError,
    InvalidInput,
    SignViolation,
)
from .graph import (
    Graph,
    Orientation,
    acyclic_orientations,
    chromatic_polynomial,
    chromatic_via_orientations,
    count_acyclic_orientations,
    count_proper_colorings,
    orientation_poset,
)
from .harness import (
    Summary,
    VerificationReport,
    enumerate_labeled_graphs,
    enumerate_labeled_posets,
    random_instances,
    verify_all,
)
from .polynomial import (
    IntPolynomial,
    RatPolynomial,
    expand_series,
    f_to_h,
    interpolate,
    reverse,
    series_numerator,
)
from .poset import (
    Poset,
    count_order_maps,
    descent_h_star,
    ideal_chain_f_vector,
    linear_extensions,
    order_map_counts,
    order_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Graph",
    "HRepPolytope",
    "HstarError",
    "IntPolynomial",
    "InternalConsistencyError",
    "InvalidInput",
    "OrderPolytope",
    "Orientation",
    "Poset",
    "RatPolynomial",
    "SignViolation",
    "Simplex",
    "Summary",
    "SymmetricDecomposition",
    "VerificationReport",
    "ab_decompose",
    "acyclic_orientations",
    "chromatic_polynomial",
    "chromatic_via_orientations",
    "count_acyclic_orientations",
    "count_order_maps",
    "count_points",
    "count_proper_colorings",
    "descent_h_star",
    "ehrhart_polynomial",
    "enumerate_labeled_graphs",
    "enumerate_labeled_posets",
    "expand_series",
    "f_to_h",
    "graph_decomposition",
    "graph_numerator",
    "h_star",
    "ideal_chain_f_vector",
    "inequality_report",
    "interpolate",
    "linear_extensions",
    "load_polytope",
    "open_decomposition",
    "open_numerator",
    "order_decomposition",
    "order_map_counts",
    "order_polynomial",
    "orientation_poset",
    "parse_polytope",
    "random_instances",
    "reverse",
    "series_numerator",
    "stapledon_pair",
    "verify_all",
]
