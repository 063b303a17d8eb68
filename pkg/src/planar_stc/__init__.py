"""
Planar STC

Spanning tree congestion of plane graphs through their duals, providing:
    - plane_graph: Rotation-system plane graphs, face tracing and duals
    - congestion: Spanning tree checks and edge congestion (two ways)
    - exact_search: Branch-and-bound computation of s(G)
    - dual_bounds: Index tables, center-tail systems and their congestion
      indicator, the breadth-first upper bound
    - grids: Triangular, rectangular and hexagonal grids and spiderwebs
    - graph_io: Graph, center-tail system and tree files
    - render: DOT and SVG figures with face labels
    - reports: Bound reports and size tables
    - config_manager: Multi-source configuration management
    - error_handler: Exception hierarchy
    - validators: Input validation
    - formatters: Output formatting utilities

Example usage:
    from planar_stc import build_bounds_report, triangular_grid

    report = build_bounds_report(triangular_grid(5))
    print(report.certified)  # 6
"""

from .config_manager import (
    ConfigManager,
    get_config,
    get_config_manager,
    get_render_defaults,
    get_report_format,
    get_search_budget,
    get_search_defaults,
)
from .congestion import (
    BranchDecomposition,
    CongestionReport,
    DualTree,
    RootedForest,
    SpanningTree,
    branch_decomposition,
    dual_tree,
    edge_congestion_cuts,
    edge_congestion_dual,
    fundamental_cut,
    verify_tree,
)
from .dual_bounds import (
    INFINITY,
    AbsoluteIndexTable,
    CenterTailSystem,
    CongestionIndicator,
    IndexTable,
    UpperBound,
    absolute_index,
    best_lower_bound,
    bfs_upper_bound,
    congestion_indicator,
    index_table,
    index_tables,
    side_index,
    validate_cts,
)
from .error_handler import (
    AssignmentIncompleteError,
    BudgetExceededError,
    CenterDisconnectedError,
    CenterTailError,
    ContainsCycleError,
    EmptySystemListError,
    InvalidRotationError,
    InvariantError,
    NoOuterEdgesError,
    NotConnectedError,
    NotOuterEdgeError,
    NotPlanarEmbeddingError,
    NotSpanningError,
    NotSpanningTreeError,
    ParseError,
    PlaneGraphError,
    StcError,
    TailNotPathError,
    TailNotReachingOuterError,
    ValidationError,
    WrongCardinalityError,
    print_error,
)
from .exact_search import ExactResult, SearchBudget, exact_stc, trivial_lower_bound
from .formatters import (
    Colors,
    colorize,
    format_duration,
    format_index_triangle,
    format_json,
    format_report_text,
    format_table,
    format_table_rows,
    print_info,
    print_success,
    print_warning,
    supports_color,
)
from .graph_io import (
    format_cts,
    format_pg,
    format_tree,
    parse_cts,
    parse_pg,
    parse_tree,
    read_cts,
    read_pg,
    read_tree,
    write_cts,
    write_json,
    write_pg,
    write_tree,
)
from .grids import (
    TriangularGridFace,
    TriangularSymmetry,
    canonical_cts,
    legacy_formula,
    hexagonal_grid,
    recognize_triangular_grid,
    rectangular_grid,
    spiderweb,
    spiderweb_graph,
    spiderweb_inner_faces,
    spiderweb_naive_tree,
    theorem_value,
    triangular_faces,
    triangular_grid,
    triangular_sides,
    triangular_symmetry,
)
from .plane_graph import (
    DualGraph,
    Edge,
    Face,
    FaceAdjacency,
    PlaneGraph,
    build_plane_graph,
    dual,
    face_adjacency,
    from_drawing,
    from_planar_embedding,
    interior_side,
    outer_edges,
    relabel_faces,
    trace_faces,
)
from .render import Labels, build_labels, face_centroid, render, render_dot, render_svg
from .reports import (
    Report,
    TableRow,
    build_bounds_report,
    build_exact_report,
    build_table,
    default_systems,
    graph_summary,
    triangular_table,
)
from .validators import (
    parse_size_range,
    validate_dimension,
    validate_family,
    validate_grid_size,
    validate_label_mode,
    validate_limit,
    validate_output_format,
    validate_side,
    validate_workers,
)

__version__ = "0.3.0"
__all__ = [
    # Version
    "__version__",
    # Config
    "ConfigManager",
    "get_config_manager",
    "get_config",
    "get_search_defaults",
    "get_render_defaults",
    "get_report_format",
    "get_search_budget",
    # Errors
    "StcError",
    "ValidationError",
    "ParseError",
    "PlaneGraphError",
    "NotConnectedError",
    "InvalidRotationError",
    "NotPlanarEmbeddingError",
    "NotSpanningTreeError",
    "WrongCardinalityError",
    "ContainsCycleError",
    "NotSpanningError",
    "NotOuterEdgeError",
    "NoOuterEdgesError",
    "CenterTailError",
    "CenterDisconnectedError",
    "TailNotPathError",
    "TailNotReachingOuterError",
    "AssignmentIncompleteError",
    "EmptySystemListError",
    "BudgetExceededError",
    "InvariantError",
    "print_error",
    # Plane graphs
    "Edge",
    "Face",
    "FaceAdjacency",
    "PlaneGraph",
    "DualGraph",
    "build_plane_graph",
    "trace_faces",
    "dual",
    "outer_edges",
    "interior_side",
    "face_adjacency",
    "from_drawing",
    "from_planar_embedding",
    "relabel_faces",
    # Congestion
    "RootedForest",
    "SpanningTree",
    "DualTree",
    "CongestionReport",
    "BranchDecomposition",
    "verify_tree",
    "dual_tree",
    "edge_congestion_cuts",
    "edge_congestion_dual",
    "fundamental_cut",
    "branch_decomposition",
    # Exact search
    "SearchBudget",
    "ExactResult",
    "exact_stc",
    "trivial_lower_bound",
    # Dual bounds
    "INFINITY",
    "IndexTable",
    "AbsoluteIndexTable",
    "CenterTailSystem",
    "CongestionIndicator",
    "UpperBound",
    "index_table",
    "index_tables",
    "side_index",
    "absolute_index",
    "validate_cts",
    "congestion_indicator",
    "best_lower_bound",
    "bfs_upper_bound",
    # Grids
    "TriangularGridFace",
    "TriangularSymmetry",
    "triangular_grid",
    "triangular_faces",
    "triangular_sides",
    "triangular_symmetry",
    "recognize_triangular_grid",
    "theorem_value",
    "legacy_formula",
    "canonical_cts",
    "rectangular_grid",
    "hexagonal_grid",
    "spiderweb_graph",
    "spiderweb",
    "spiderweb_naive_tree",
    "spiderweb_inner_faces",
    # Files
    "format_pg",
    "parse_pg",
    "read_pg",
    "write_pg",
    "format_cts",
    "parse_cts",
    "read_cts",
    "write_cts",
    "format_tree",
    "parse_tree",
    "read_tree",
    "write_tree",
    "write_json",
    # Rendering
    "Labels",
    "build_labels",
    "face_centroid",
    "render",
    "render_dot",
    "render_svg",
    # Reports
    "Report",
    "TableRow",
    "graph_summary",
    "default_systems",
    "build_bounds_report",
    "build_exact_report",
    "triangular_table",
    "build_table",
    # Validators
    "validate_grid_size",
    "validate_dimension",
    "validate_family",
    "validate_side",
    "validate_output_format",
    "validate_workers",
    "validate_limit",
    "validate_label_mode",
    "parse_size_range",
    # Formatters
    "Colors",
    "colorize",
    "supports_color",
    "format_json",
    "format_table",
    "format_report_text",
    "format_table_rows",
    "format_index_triangle",
    "format_duration",
    "print_info",
    "print_success",
    "print_warning",
]
