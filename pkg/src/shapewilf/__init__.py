"""
shapewilf: permutation patterns, partially ordered patterns, Ferrers-board
fillings, and exhaustive (shape-)Wilf-equivalence checking.
"""

from .perms import (
    Perm,
    PatternSet,
    all_perms,
    apply_ops,
    avoids_all,
    complement,
    contains,
    direct_sum,
    format_pattern_set,
    format_perm,
    inverse,
    make_pattern_set,
    make_perm,
    occurrences,
    parse_pattern_set,
    parse_perm,
    pattern_occurrences,
    reverse,
    set_apply_ops,
    set_complement,
    set_direct_sum,
    set_inverse,
    set_reverse,
)
from .pops import (
    Pop,
    antichain_pop,
    below_all_pop,
    chain_pop,
    fan_pop,
    format_pop,
    parse_pop,
    pop,
    pop_avoids,
    pop_occurrences,
    pop_to_pattern_set,
    valley_pop,
)
from .boards import (
    Board,
    Filling,
    OutOfBoardError,
    admits_filling,
    board_counts_to_csv,
    board_from_row_lengths,
    count_fillings,
    enumerate_boards,
    filling_avoids_all,
    filling_contains,
    filling_from_permutation,
    fillings,
    format_board,
    format_filling,
    make_board,
    make_filling,
    parse_board,
    parse_filling,
    square_board,
    staircase_board,
    transversal_count_formula,
)
from .bijections import (
    BijectionError,
    BijectionOracle,
    VerificationReport,
    direct_sum_transfer,
    fan_bijection,
    fan_bottom_last_oracle,
    fan_oracle,
    fan_to_bottom_last,
    transfer_oracle,
    verify_bijection,
    wedge_valley_bijection,
    wedge_valley_oracle,
)
from .equivalence import (
    CountSequence,
    EquivalenceReport,
    avoider_counts,
    avoiders,
    count_avoiders,
    count_avoiders_naive,
    count_sequence,
    evaluate_set_expression,
    find_shape_wilf_divergence,
    shape_wilf_table,
    symmetry_identity_check,
    symmetry_orbit,
    trivial_symmetry_class,
    wilf_table,
)

__version__ = "0.1.0"
