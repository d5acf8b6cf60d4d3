"""Antidirected Hamilton cycles in oriented graphs: exact search, the
extremal families at the Ore-type threshold, and structural checkers."""

from .generators import (
    ExtremalInstance,
    ExtremalSpec,
    RandomModel,
    generate_extremal,
    labeled_oriented_graphs,
    random_oriented,
)
from .graph import (
    INFINITE,
    AntidirectedWalk,
    ArcError,
    DegreeProfile,
    DuplicateArcError,
    LoopError,
    OrientedGraph,
    Step,
    TwoCycleError,
    VertexRangeError,
    VertexSet,
    WalkCheck,
    degree_profile,
    sigma_plus_minus,
    validate_antidirected,
)
from .io import GraphFormatError, load_graph, read_graph, save_graph, write_graph
from .partition import Partition4, PartitionError
from .solver import (
    BudgetExceeded,
    SolveResult,
    Verdict,
    adhc_oracle,
    adhp_oracle,
    find_adhc,
    find_adhp_between,
)

__version__ = "0.1.0"
