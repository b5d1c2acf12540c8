"""Finite-group centralizer analysis: lattices, Z*-classes, Möbius checks, graphs."""

from .perm import CycleNotationError, Permutation, parse_cycle_notation
from .sets import ElemSet, Subgroup
from .groups import (
    BUILTIN_FAMILIES,
    Group,
    GroupTableError,
    InvariantViolation,
    OrderBoundError,
    builtin_group,
    cayley_table_text,
    center,
    direct_product,
    element_order,
    group_from_cayley_table,
    group_from_generator_file,
    group_from_generators,
    is_subgroup,
    max_order_bound,
    parse_cayley_table_text,
    subgroup_generated_by,
    subgroup_label,
)
from .centralizers import (
    CentClass,
    centralizer,
    class_transversal,
    closure,
    element_center,
    fiber_supremum,
    is_abelian_subset,
    is_closed_abelian_iff,
    u_star,
    z_star_partition,
)
from .lattice import (
    CenterPoset,
    CentLattice,
    all_subgroups,
    build_lattice,
    center_poset,
    f_group_chain_witness,
    hasse_edges,
    is_f_group,
)
from .moebius import (
    CongruenceLine,
    CongruenceReport,
    MoebiusTable,
    check_class_size_congruence,
    check_f_group_counts,
    check_mob_sums,
    moebius,
    p_group_prime,
)
from .graphs import (
    AbelianGroupError,
    GroupGraph,
    centralizer_graph,
    commuting_graph,
    default_transversal,
    degree_csv,
    export_dot,
    quotient_consistency,
    transversal_graph,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupError",
    "BUILTIN_FAMILIES",
    "CentClass",
    "CenterPoset",
    "CentLattice",
    "CongruenceLine",
    "CongruenceReport",
    "CycleNotationError",
    "ElemSet",
    "Group",
    "GroupGraph",
    "GroupTableError",
    "InvariantViolation",
    "MoebiusTable",
    "OrderBoundError",
    "Permutation",
    "Subgroup",
    "all_subgroups",
    "build_lattice",
    "builtin_group",
    "cayley_table_text",
    "center",
    "center_poset",
    "centralizer",
    "centralizer_graph",
    "check_class_size_congruence",
    "check_f_group_counts",
    "check_mob_sums",
    "class_transversal",
    "closure",
    "commuting_graph",
    "default_transversal",
    "degree_csv",
    "direct_product",
    "element_center",
    "element_order",
    "export_dot",
    "f_group_chain_witness",
    "fiber_supremum",
    "group_from_cayley_table",
    "group_from_generator_file",
    "group_from_generators",
    "hasse_edges",
    "is_abelian_subset",
    "is_closed_abelian_iff",
    "is_f_group",
    "is_subgroup",
    "max_order_bound",
    "moebius",
    "p_group_prime",
    "parse_cayley_table_text",
    "parse_cycle_notation",
    "quotient_consistency",
    "subgroup_generated_by",
    "subgroup_label",
    "transversal_graph",
    "u_star",
    "z_star_partition",
]
