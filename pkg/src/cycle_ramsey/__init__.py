"""Desk-scale exact toolkit for multicolor Ramsey numbers of cycles.

Builds and verifies extremal colorings, decomposes color classes into
bipartite and sparse parts, executes the odd- and even-case proof
machinery on finite instances with exact rational arithmetic, and
certifies small Ramsey values by pruned exhaustive search.
"""

from .certificates import (
    CycleCertificate,
    MatchingCertificate,
    StructureWitness,
    WitnessKind,
    verify_cycle,
    verify_matching,
)
from .constructions import (
    ComponentTag,
    StructuralCertificate,
    TaggedComponent,
    bondy_erdos_coloring,
    structural_certificate,
    verify_mono_cycle_free,
)
from .cycles import (
    ComponentInfo,
    ComponentReport,
    SweepReport,
    components,
    contains_cycle_of_length,
    eg_threshold,
    erdos_gallai_sweep,
    longest_cycle,
)
from .decompose import (
    DecompositionCheck,
    FLDecomposition,
    PeelResult,
    check_decomposition,
    fl_decompose,
    matching_threshold,
    min_degree_peel,
)
from .engine import (
    CellEntry,
    ChainReport,
    EvenCaseReport,
    Lemma4Trace,
    Parity,
    PkParameters,
    TraceVerdict,
    even_engine,
    lemma4_execute,
    lemma4_inequality_check,
    pk_witness_search,
    verify_witness,
)
from .errors import (
    ColorOutOfRange,
    CycleRamseyError,
    CycleTooShort,
    DuplicateEdge,
    EvenCycleLength,
    FormatError,
    InvalidParams,
    LoopEdge,
    NotACounterexample,
    OddCycleLength,
    ParamOutOfRange,
    TargetTooLarge,
    VertexOutOfRange,
)
from .graphs import (
    Edge,
    EdgeColoring,
    Graph,
    build_graph,
    color_class,
    complete_graph,
    constant_coloring,
    cycle_graph,
    induced_coloring,
    induced_subgraph,
    make_coloring,
    normalize_edge,
)
from .matching import matching_number, max_matching
from .search import (
    LowerBoundResult,
    SearchResult,
    SearchStats,
    SearchVerdict,
    WitnessMode,
    counterexample_minimize,
    edge_order,
    lower_bound_witness_search,
    ramsey_check,
    read_checkpoint,
    resume_search,
    write_checkpoint,
)

__version__ = "0.1.0"

__all__ = [
    "CellEntry",
    "ChainReport",
    "ColorOutOfRange",
    "ComponentInfo",
    "ComponentReport",
    "ComponentTag",
    "CycleCertificate",
    "CycleRamseyError",
    "CycleTooShort",
    "DecompositionCheck",
    "DuplicateEdge",
    "Edge",
    "EdgeColoring",
    "EvenCaseReport",
    "EvenCycleLength",
    "FLDecomposition",
    "FormatError",
    "Graph",
    "InvalidParams",
    "Lemma4Trace",
    "LoopEdge",
    "LowerBoundResult",
    "MatchingCertificate",
    "NotACounterexample",
    "OddCycleLength",
    "ParamOutOfRange",
    "Parity",
    "PeelResult",
    "PkParameters",
    "SearchResult",
    "SearchStats",
    "SearchVerdict",
    "StructuralCertificate",
    "StructureWitness",
    "SweepReport",
    "TaggedComponent",
    "TargetTooLarge",
    "TraceVerdict",
    "VertexOutOfRange",
    "WitnessKind",
    "WitnessMode",
    "bondy_erdos_coloring",
    "build_graph",
    "check_decomposition",
    "color_class",
    "complete_graph",
    "components",
    "constant_coloring",
    "contains_cycle_of_length",
    "counterexample_minimize",
    "cycle_graph",
    "edge_order",
    "eg_threshold",
    "erdos_gallai_sweep",
    "even_engine",
    "fl_decompose",
    "induced_coloring",
    "induced_subgraph",
    "lemma4_execute",
    "lemma4_inequality_check",
    "longest_cycle",
    "lower_bound_witness_search",
    "make_coloring",
    "matching_number",
    "matching_threshold",
    "max_matching",
    "min_degree_peel",
    "normalize_edge",
    "pk_witness_search",
    "ramsey_check",
    "read_checkpoint",
    "resume_search",
    "structural_certificate",
    "verify_cycle",
    "verify_matching",
    "verify_mono_cycle_free",
    "verify_witness",
    "write_checkpoint",
]
