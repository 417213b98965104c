"""(2,3)-cordial labellings of digraphs and (2,3)-orientations of graphs."""

from .construct import (
    ConstructionError,
    ConstructionResult,
    WheelCaseTag,
    check_cycle_out_fan_not_cordial,
    check_cycle_out_wheel_not_cordial,
    label_5_tournament,
    orient_fan,
    orient_wheel,
    wheel_case,
)
from .decide import (
    CensusReport,
    FalsifiedClaimError,
    Verdict,
    brute_force_orientable_oracle,
    cordial_feasible_triple,
    is_23_cordial,
    is_23_orientable,
    max_arcs,
    non_closure_witnesses,
    tournament_census,
    verify_extremal_bound,
)
from .graphs import (
    Digraph,
    Graph,
    Tournament,
    canonical_form,
    enumerate_tournaments,
    gen_complete_graph,
    gen_cycle_out_wheel,
    gen_fan,
    gen_parallel_edges_graph,
    gen_wheel,
    out_degree_sequence,
    reverse_digraph,
)
from .labelling import (
    CapExceededError,
    LambdaSplit,
    LambdaTriple,
    Scope,
    VertexLabelling,
    complement_labelling,
    enumerate_friendly_labellings,
    induce_arc_labelling,
    is_cordial_triple,
    is_friendly,
    lambda_of,
    lambda_split,
)
from .quasigroup import CayleyTable, enumerate_quasigroups, zk_minus_table

__version__ = "0.1.0"
