"""Linear-time (1,1,2,2,2)-packing coloring of Halin graphs with max degree 5.

Construction, independent verification, exact small-graph oracle, seeded
generators, and a scaling benchmark.  Hot loops run on a compiled kernel
when built, with a pure-Python fallback selected at import time.
"""

from ._kernels import available_backends, backend_name
from .bench import BenchRecord, emit_csv, parse_csv, run_scaling
from .colorer import (
    Color,
    Coloring,
    CycleView,
    InvariantViolation,
    MaxDegreeExceededError,
    PipelineRun,
    STANDARD_CLASSES,
    check_template,
    coloring_from_text,
    coloring_to_text,
    complement_one,
    conflicts_resolving,
    packing_coloring,
    recoloring_dispatch,
    run_pipeline,
    two_color_tree,
    two_neighborhoods,
)
from .generator import (
    GeneratorConfig,
    SplitMix64,
    gen_cubic_caterpillar,
    gen_family,
    gen_random_halin,
    gen_wheel,
)
from .graph import (
    HalinGraph,
    HalinGraphError,
    build_halin,
    cycle_predecessor,
    cycle_successor,
    distance,
    graph_from_text,
    graph_to_text,
)
from .oracle import OracleResult, all_pairs_distances, cross_check, s_packing_colorable
from .verifier import (
    PackingSequence,
    VerificationReport,
    Violation,
    verify_packing,
    verify_sequence_form,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "Color",
    "Coloring",
    "CycleView",
    "GeneratorConfig",
    "HalinGraph",
    "HalinGraphError",
    "InvariantViolation",
    "MaxDegreeExceededError",
    "OracleResult",
    "PackingSequence",
    "PipelineRun",
    "STANDARD_CLASSES",
    "SplitMix64",
    "VerificationReport",
    "Violation",
    "all_pairs_distances",
    "available_backends",
    "backend_name",
    "build_halin",
    "check_template",
    "coloring_from_text",
    "coloring_to_text",
    "complement_one",
    "conflicts_resolving",
    "cross_check",
    "cycle_predecessor",
    "cycle_successor",
    "distance",
    "emit_csv",
    "gen_cubic_caterpillar",
    "gen_family",
    "gen_random_halin",
    "gen_wheel",
    "graph_from_text",
    "graph_to_text",
    "packing_coloring",
    "parse_csv",
    "recoloring_dispatch",
    "run_pipeline",
    "run_scaling",
    "s_packing_colorable",
    "two_color_tree",
    "two_neighborhoods",
    "verify_packing",
    "verify_sequence_form",
]
