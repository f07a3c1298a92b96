"""Exact spanning-tree arithmetic for Galois covers of finite graphs.

Build covers from voltage assignments, count spanning trees of every
intermediate graph with integer-only linear algebra, and verify the
kernel-poset and cyclic-subgroup product formulas, the elementary-abelian
special case, and the cyclic non-existence certificates -- all as exact
integer identities.
"""

from .covers import (
    Cover,
    VoltageAssignment,
    conjugate_kappa_check,
    derived_graph,
    intermediate_graph,
    intermediate_kappa,
    is_galois,
    random_connected_voltage,
)
from .characters import (
    CharacterTable,
    ClassFunction,
    artin_coefficients,
    character_table,
    induced_trivial_character,
    inner_product,
    is_exceptional,
    is_irreducibly_represented,
    one_dim_characters,
    verify_eq3,
)
from .cyclotomic import CyclotomicInt, CycloPoly, cyclotomic_polynomial
from .family import (
    FamilySpec,
    build_matrix_M,
    exp_join,
    exp_meet,
    exp_pow,
    family_kappa,
    kappa_degree_in_t,
    lemma_matrix_check,
    nonexistence_certificate,
)
from .graphs import (
    SerreGraph,
    bouquet,
    brute_force_spanning_trees,
    build_graph,
    complete_graph,
    cycle_graph,
    hashimoto_check,
    path_graph,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    alternating_group,
    cyclic_group,
    cyclic_subgroups,
    dicyclic_group,
    dihedral_group,
    direct_product,
    from_cayley_table,
    from_permutations,
    parse_group_spec,
    quotient_group,
    symmetric_group,
)
from .lfunctions import (
    MatrixRep,
    bouquet_h_formula,
    h_at_one,
    h_poly,
    regular_rep,
    trivial_rep,
    twisted_matrices,
    verify_factorization,
    verify_inter_rel,
    verify_prop_formula,
)
from .posets import (
    MobiusTable,
    Poset,
    adjoin_bottom,
    adjoin_top,
    classical_mobius,
    cyclic_poset,
    hasse_dot,
    kernel_poset,
    mobius,
    mobius_inversion_check,
)
from .report import VerificationReport
from .theorems import (
    random_suite,
    table1_row,
    verify_brauer_kuroda,
    verify_custom_relation,
    verify_euler_zero,
    verify_hmsv,
    verify_kuroda,
)

__version__ = "0.1.0"
