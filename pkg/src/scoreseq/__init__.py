"""Score sequences of deterministic and random tournaments on any graph."""

from .feasibility import (
    Feasible,
    SubsetViolation,
    SumMismatch,
    check,
    check_complete_majorization,
    check_flow,
    check_subset,
)
from .graph import (
    Graph,
    complete_graph,
    enumerate_forests,
    find_cycle_in_edge_subset,
    induced_edge_count,
    path_graph,
    star_graph,
)
from .realization import (
    InfeasibleError,
    RealizationResult,
    forest_reduce,
    fractional_realization,
    realize,
    realize_integral,
)
from .tournaments import (
    RandomTournament,
    Tournament,
    as_deterministic,
    mean_score_sequence,
    score_sequence,
)

__version__ = "0.1.0"
