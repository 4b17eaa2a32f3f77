"""Extremal intersecting hypergraphs, kernels and set pair systems."""

__version__ = "0.1.0"

from .bounds import (  # noqa: E402
    THEOREMS,
    BoundReport,
    BoundValue,
    bound_report,
    deza_order_f,
    deza_size_bound,
    evaluate,
    furedi_order_bound,
    furedi_size_bound,
    hall_conjecture_bound,
    majumder_kernel_bound,
    nontrivial_order_question,
    ord_ker_bound_1_intersecting,
    sps_order_bound,
    sps_size_bound,
)
from .constructions import (  # noqa: E402
    ConstructionManifest,
    furedi_order_family,
    lambda_lift,
    one_intersecting_h_a,
    sps_star_family,
    sunflower_family,
)
from .diagnostics import (  # noqa: E402
    classify_degrees,
    diagnostics_report,
    edge_vertex_bound_check,
    heavy_edge_bound_check,
    mccarthy_vanstone_residual,
)
from .errors import BudgetExceeded, FormatError, HyperforgeError, PreconditionError  # noqa: E402
from .geometry import AffinePlane, PrimeField, ProjectivePlane, affine_plane, projective_plane, verify_plane_axioms  # noqa: E402
from .hypergraph import Hypergraph, format_text, parse_text, read_hypergraph, write_hypergraph  # noqa: E402
from .kernel import KernelResult, is_kernel, kernel_degree_rule, min_kernel_exact  # noqa: E402
from .oracle import SearchSpace, enumerate_trees, max_order, max_size, min_kernel_brute  # noqa: E402
from .sps import (  # noqa: E402
    SetPairSystem,
    Tree,
    classify_a_graph,
    format_sps,
    is_bounded,
    is_one_cross_intersecting,
    odd_distance_set,
    parse_sps,
    sps_order,
    sps_report,
    tree_odd_sum,
    verify_sps,
)
