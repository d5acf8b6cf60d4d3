"""Structural checks for oriented graphs that are not robust outexpanders."""

from .conditions import (
    BalanceUnreachable,
    CPReport,
    LReport,
    OutlierReport,
    Side,
    balance_deviation,
    balanced_random_subset,
    check_CP_conditions,
    check_L_conditions,
    degree_outlier_report,
    semidegree_implication,
)
from .expander import (
    EXACT_MAX_N,
    ExpanderParams,
    ExpanderReport,
    ExpanderTooLarge,
    Mode,
    is_robust_outexpander,
    robust_out_neighborhood,
    size_window,
)
from .partition import (
    DerivedPartition,
    GoodBadLabels,
    NiceReport,
    UnassignableVertex,
    acceptable,
    check_nice_partition,
    classify_good_bad,
    derive_nice_partition,
    find_special_arcs,
    find_two_disjoint_special_arcs,
    is_special,
    reassign_by_acceptability,
)
from .paths import (
    ExtensionFailed,
    PathCheck,
    ProperPath,
    TargetUnreachable,
    build_bd_path,
    check_bd_path,
    check_proper_path,
    extend_to_proper_path,
    min_degree_subgraph,
)
