"""Exact solver for (g,f)-parity orientations of multigraphs.

An orientation is a (g,f)-parity orientation when every out-degree lies in
``{g(v), g(v)+2, ..., f(v)}``. The solver either returns such an
orientation or a pair of disjoint vertex sets ``(S, T)`` on which the
deficiency :func:`eta` is negative.
"""

from .criteria import (
    Certificate,
    CutPair,
    delta,
    eta,
    find_factor_certificate,
    find_orientation_certificate,
    frank_gyarfas_feasible,
    verify_factor,
    verify_orientation,
)
from .factor import (
    SolveResult,
    brute_force_parity_factor,
    build_gadget,
    find_parity_factor,
    find_parity_orientation,
    solve_parity_factor,
)
from .graph import (
    Bounds,
    Component,
    Graph,
    GraphError,
    Infeasible,
    LoopError,
    ParseError,
    SizeLimitError,
    components_excluding,
    edge_count_between,
    edge_count_within,
    normalize_bounds,
    parse_graph,
    serialize_graph,
)
from .matching import brute_force_max_matching, has_perfect_matching, max_matching
from .oracle import (
    ValidationConfig,
    ValidationReport,
    cross_validate,
    odd_count_identity_check,
    orientation_exists_brute,
    random_instance,
)
from .subdivision import (
    SubdivisionMap,
    factor_to_orientation,
    lift_bounds,
    orientation_to_factor,
    out_degrees,
    reverse,
    subdivide,
)

__version__ = "0.1.0"
