"""Exact classification, membership, rank and isomorphism computations for
finite algebraic structures given as Cayley tables."""

from .core import (
    BudgetError,
    CayleyTable,
    Decision,
    ElementSet,
    InputError,
    Parenthesization,
    RingTable,
    StructureKind,
    balanced_parenthesization,
    classify,
    cube_eval,
    cube_set,
    eval_parenthesized,
    is_associative,
    is_latin_square,
    parenthesizations,
    product,
    validate_ring,
)
from .membership import (
    bounded_subquasigroup_membership,
    closure,
    cube_membership,
    subgroup_membership,
    submagma_membership,
    subring_closure,
    subring_closure_with_one,
    subring_membership,
    subring_membership_graph,
    subsemigroup_membership,
)
from .ranks import (
    RankReport,
    RingRankReport,
    SearchLimits,
    generalized_rank,
    group_rank,
    magma_rank,
    membership_via_rank,
    quasigroup_cube_rank,
    quasigroup_rank_decision,
    rank_decision,
    ring_rank,
    submagma_rank,
)
from .variants import (
    ChainReport,
    check_chain,
    is_independent,
    max_independent_bound_check,
    rank_variant,
    upper_rank,
)
from .iso import (
    IsoVerdict,
    brute_force_isomorphic,
    find_cube_generating_sequence,
    product_equality,
    quasigroup_isomorphic,
)

__version__ = "0.1.0"
