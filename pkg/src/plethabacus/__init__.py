"""Exact Schur expansions of s_nu * (p_r o h_m) via bead moves on an abacus.

The package has two independent halves that check each other: the
combinatorial side (partitions, abacus, strips, symfunc) computes signed
expansions through border-strip removals, while oracle recomputes the
same expansions by brute-force polynomial arithmetic.
"""

from .abacus import (
    Abacus,
    BadRunner,
    BeadCountTooSmall,
    BeadMove,
    IllegalMove,
    IncompatibleAbaci,
    NotMovable,
    abacus_of,
    apply_moves,
    final_positions,
    inversion_sign,
    movable_beads,
    normalized_abacus,
    partition_of,
    runner_beads,
    runner_positions,
    single_step_moves,
    strip_height,
    swap_bead,
    with_bead_count,
)
from .cli import VerifyConfig, main, run_verify
from .oracle import (
    MultivariatePolynomial,
    NonTerminating,
    NotSymmetric,
    TooFewVariables,
    newton_check,
    oracle_plethystic_mn,
    pleth_pr,
    poly_h,
    poly_p,
    poly_schur,
    schur_decompose,
)
from .partitions import (
    Box,
    InvalidPartition,
    NotContained,
    Partition,
    SkewPartition,
    make_partition,
    make_skew,
    minimal_distinct_row,
    partitions_of_size,
    partitions_of_size_containing,
    partitions_up_to,
    rim,
    subpartitions_of_size,
)
from .strips import (
    BorderStrip,
    Decomposition,
    EmptySkew,
    NotDivisible,
    NotTypeIICase,
    PairingWitness,
    RunnerType,
    SignRecursionReport,
    border_strip,
    border_strips,
    border_strips_geometric,
    classify_runner,
    decomposition_moves,
    final_border_strip,
    order_independent_sign,
    pairing_witness,
    r_decompose,
    runner_is_decomposable,
    runner_profile,
    sgn_r,
    sign_recursion_check,
)
from .symfunc import (
    SchurExpansion,
    mn_multiply,
    plethystic_mn,
    plethystic_mn_multi,
    power_product_pleth,
)

__version__ = "0.1.0"
