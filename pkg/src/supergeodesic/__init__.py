"""Combinatorics of super efficient geodesics in the curve complex."""

from .errors import (
    EmptyInput,
    Infeasible,
    LengthMismatch,
    NotApplicable,
    NotNormalizable,
    NotSawtooth,
    OutOfRange,
    PolygonMismatch,
    SupergeodesicError,
)
from .seqcore import (
    PathComplexity,
    SawtoothWitness,
    compare_total,
    is_sawtooth,
    normalize_sawtooth,
    path_complexity,
    total_complexity,
    witness,
)
from .dotgraph import (
    DotGraph,
    PolygonKind,
    SigmaPolygon,
    apply_box_surgery,
    box_surgery,
    build_dot_graph,
    find_boxes,
    find_hexagons,
    find_polygons,
)
from .lip import (
    ArcDecomposition,
    LipInstance,
    LipSolution,
    enumerate_circuits,
    scaling_factor,
    solve_lip,
    standard_s12,
    verify_igi_base,
)
from .bounds import (
    bowditch_bound,
    compare_bounds,
    crossover_intersection,
    hempel_bound,
    igi_distance_bound,
    igi_min_intersection,
)
from .rainbow import (
    CoordinateChain,
    ThresholdReport,
    candidate_bound,
    feasible_chain,
    final_k,
    initial_k,
    min_parallel_count,
    parallel_classes,
    s_of_k,
    super_bound,
    threshold_report,
    triangulation_edges,
    webb_bound,
)

__version__ = "0.1.0"
