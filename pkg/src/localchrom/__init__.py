"""Research toolkit for local and directed local chromatic numbers:
shift-graph families, exact desk-scale solvers, constructive
orientations, coloring/set-family translations, and verification
suites."""

from .constructions import (
    DualityOutcome,
    PropertyReport,
    SwideOrientationResult,
    SwideVertexState,
    balanced_pullback_orientation,
    coloring_to_families,
    decide_local2,
    families_to_coloring,
    mycielski_orientation,
    oriented_shift_with_coloring,
    pullback_orientation,
    swide_orientation,
    swide_state,
    wide_orientation,
)
from .core import (
    BadParameter,
    BudgetExceeded,
    Coloring,
    ConditionViolated,
    Digraph,
    DuplicateLabel,
    Graph,
    NotHomomorphism,
    NotOrientation,
    NotProper,
    NotWide,
    PartialColoring,
    RainbowBiclique,
    SelfLoop,
    ToolkitError,
    TooLarge,
    UnknownEndpoint,
    UnknownSuite,
    WrongColorCount,
    WrongGraphShape,
    build_digraph,
    build_graph,
    directed_local_value,
    find_rainbow_biclique,
    is_proper,
    local_value,
    walk_reach,
)
from .generators import (
    APEX,
    alternating_odd_cycle,
    balanced_complete_orientation,
    complete_graph,
    cycle_graph,
    generalized_mycielski,
    kneser,
    schrijver,
    shift_graph,
    sym_directed_shift,
    symmetric_shift_graph,
    wide_universal,
)
from .io import (
    coloring_from_dict,
    coloring_to_dict,
    digraph_to_dict,
    graph_from_dict,
    graph_to_dict,
    load_json,
    read_dimacs,
    save_json,
    write_dimacs,
)
from .setsystems import (
    CrossFamily,
    FamilySearchResult,
    bollobas_sum,
    check_family,
    complement_family,
    family_ok,
    family_size_bound,
    max_shift_order,
    skew_uniform_bound,
)
from .solvers import (
    OrientationWitness,
    SolveReport,
    chromatic_number,
    directed_local_chromatic,
    find_coloring_without_rainbow,
    find_homomorphism,
    independence_number,
    is_s_wide,
    local_chromatic,
    max_directed_local_chromatic,
    min_directed_local_chromatic,
)
from .suites import (
    SUITES,
    SuiteCheck,
    SuiteResult,
    family_search_experiment,
    run_all,
    run_suite,
    wide_threshold_experiment,
)

__version__ = "0.1.0"

__all__ = [
    "APEX",
    "BadParameter",
    "BudgetExceeded",
    "Coloring",
    "ConditionViolated",
    "CrossFamily",
    "Digraph",
    "DualityOutcome",
    "DuplicateLabel",
    "FamilySearchResult",
    "Graph",
    "NotHomomorphism",
    "NotOrientation",
    "NotProper",
    "NotWide",
    "OrientationWitness",
    "PartialColoring",
    "PropertyReport",
    "RainbowBiclique",
    "SUITES",
    "SelfLoop",
    "SolveReport",
    "SuiteCheck",
    "SuiteResult",
    "SwideOrientationResult",
    "SwideVertexState",
    "ToolkitError",
    "TooLarge",
    "UnknownEndpoint",
    "UnknownSuite",
    "WrongColorCount",
    "WrongGraphShape",
    "alternating_odd_cycle",
    "balanced_complete_orientation",
    "balanced_pullback_orientation",
    "bollobas_sum",
    "build_digraph",
    "build_graph",
    "check_family",
    "chromatic_number",
    "coloring_from_dict",
    "coloring_to_dict",
    "coloring_to_families",
    "complement_family",
    "complete_graph",
    "cycle_graph",
    "decide_local2",
    "digraph_to_dict",
    "directed_local_chromatic",
    "directed_local_value",
    "families_to_coloring",
    "family_ok",
    "family_search_experiment",
    "family_size_bound",
    "find_coloring_without_rainbow",
    "find_homomorphism",
    "find_rainbow_biclique",
    "generalized_mycielski",
    "graph_from_dict",
    "graph_to_dict",
    "independence_number",
    "is_proper",
    "is_s_wide",
    "kneser",
    "load_json",
    "local_chromatic",
    "local_value",
    "max_directed_local_chromatic",
    "max_shift_order",
    "min_directed_local_chromatic",
    "mycielski_orientation",
    "oriented_shift_with_coloring",
    "pullback_orientation",
    "read_dimacs",
    "run_all",
    "run_suite",
    "save_json",
    "schrijver",
    "shift_graph",
    "skew_uniform_bound",
    "swide_orientation",
    "swide_state",
    "sym_directed_shift",
    "symmetric_shift_graph",
    "walk_reach",
    "wide_orientation",
    "wide_threshold_experiment",
    "wide_universal",
    "write_dimacs",
]
