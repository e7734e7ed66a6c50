"""Verification toolkit for extremal problems on graphs avoiding squared Hamilton cycles."""

__version__ = "0.1.0"

from .core import (
    Graph,
    PlacementSpec,
    DegreeStats,
    build_graph,
    complement,
    power,
    join,
    disjoint_union,
    delete_pattern_edges,
    complete_minus,
    degree_stats,
    encode_graph6,
    decode_graph6,
)
from .iso import (
    canonical_form,
    canonical_graph,
    is_isomorphic,
    embed_subgraph,
    embeds,
    clique_number,
)
from .catalog import (
    FamilyId,
    GraphFamily,
    LiftSpec,
    family,
    gadget,
    load_gadget_file,
    default_gadget_path,
    lift_minus,
    lift_plus,
    lift_plus_t,
    describe,
    named,
)
from .enumeration import (
    iter_family,
    family_count,
    enumerate_family,
    embeds_in_host,
    nonembeddable_upto,
    minimal_forbidden_cores,
)
from .closure import ClosureResult, k_closure, is_complete
from .spectral import (
    SpectralResult,
    CharPolyParams,
    spectral_radius,
    double_star_mu,
    hpoly_eval,
    hpoly_identity_check,
    hpoly_largest_root,
)
from .squareham import (
    SquareHamResult,
    ExtremalReport,
    contains_square_hamilton,
    verify_witness,
    edge_extremal,
    spectral_extremal,
    partition_family,
    classify_nonembeddable,
)
from .reports import (
    Discrepancy,
    RunConfig,
    VerificationReport,
    TARGETS,
    make_report,
    report_to_json,
    report_from_json,
    report_to_markdown,
    export_report,
    write_report,
    import_graphs,
    export_graphs,
    config_fingerprint,
)
from .harness import CLAIMS, resolve_range, run

__all__ = [
    "Graph",
    "PlacementSpec",
    "DegreeStats",
    "build_graph",
    "complement",
    "power",
    "join",
    "disjoint_union",
    "delete_pattern_edges",
    "complete_minus",
    "degree_stats",
    "encode_graph6",
    "decode_graph6",
    "canonical_form",
    "canonical_graph",
    "is_isomorphic",
    "embed_subgraph",
    "embeds",
    "clique_number",
    "FamilyId",
    "GraphFamily",
    "LiftSpec",
    "family",
    "gadget",
    "load_gadget_file",
    "default_gadget_path",
    "lift_minus",
    "lift_plus",
    "lift_plus_t",
    "describe",
    "named",
    "iter_family",
    "family_count",
    "enumerate_family",
    "embeds_in_host",
    "nonembeddable_upto",
    "minimal_forbidden_cores",
    "ClosureResult",
    "k_closure",
    "is_complete",
    "SpectralResult",
    "CharPolyParams",
    "spectral_radius",
    "double_star_mu",
    "hpoly_eval",
    "hpoly_identity_check",
    "hpoly_largest_root",
    "SquareHamResult",
    "ExtremalReport",
    "contains_square_hamilton",
    "verify_witness",
    "edge_extremal",
    "spectral_extremal",
    "partition_family",
    "classify_nonembeddable",
    "Discrepancy",
    "RunConfig",
    "VerificationReport",
    "TARGETS",
    "make_report",
    "report_to_json",
    "report_from_json",
    "report_to_markdown",
    "export_report",
    "write_report",
    "import_graphs",
    "export_graphs",
    "config_fingerprint",
    "CLAIMS",
    "resolve_range",
    "run",
    "__version__",
]
