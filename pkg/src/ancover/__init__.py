"""Exact computations with conjugacy classes of alternating groups.

The package computes, in exact arithmetic, products of conjugacy classes
in A_n: Frobenius triple counts, coverage sets and covering numbers, the
character theory needed for them (including the quadratic-irrational
values on split classes), and constructive witness factorizations built
by interval packing and orbit rebuilding.  A brute-force oracle validates
everything at small degree.
"""

from ancover.combinatorics import (
    Partition,
    FrobeniusSymbol,
    SubpartitionKind,
    TypedSubpartition,
    transpose,
    frobenius_symbol,
    is_split_type,
    decompose_subpartitions,
    phi,
    enumerate_partitions,
)
from ancover.permutations import (
    Permutation,
    ClassLabel,
    cycle_type,
    class_representative,
    an_class_of,
    an_class_labels,
    kappa,
    is_real_in_an,
)
from ancover.characters import (
    AlgebraicValue,
    IrreducibleLabel,
    CharacterTable,
    mn_value,
    degree,
    hook_size,
    an_character_value,
    an_character_table,
)
from ancover.classalgebra import (
    CoverageReport,
    class_size,
    frobenius_count,
    covers,
    is_covered_by,
    covering_number,
)
from ancover.constructor import (
    Interval,
    PackingPlan,
    ValidSequence,
    WitnessPair,
    greedy_pack,
    find_opposite_valid_sequences,
    packing_cycle,
    rebuild,
    construct_witnesses,
    cover_with_ncycles,
)
from ancover.bounds import (
    EProfile,
    e_profile,
    hook_bound,
    prop24_certificate,
    amgm_report,
    min_split_degree_report,
)

__version__ = "0.1.0"
