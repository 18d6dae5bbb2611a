"""Homomorphism extension for permutation groups.

Decide, search, count and threshold-enumerate the extensions of a partial
map gamma from a permutation group G <= S_n into S_m, via a reduction to a
triangular oracle subset-sum problem over conjugacy classes of subgroups.
"""

from .counters import Counters
from .errors import (
    BoundExceededError,
    DegreeMismatchError,
    HomextError,
    InconsistentSolutionError,
    NotASubgroupError,
    PartialMapError,
    TriangularStructureError,
)
from .extension import (
    Extension,
    HomExtInstance,
    SubgroupClassKey,
    build_extension,
    compute_target_multiset,
    coset_action_images,
    count_extensions,
    enumerate_equivalent,
    extension_restricts_to_gamma,
    f_oracle,
    homext_threshold,
    index_preorder,
    jordan_liebeck_support,
    reduce_instance,
    solve,
    stabilizer_under_hom,
    triangle_oracle,
)
from .groupalg import (
    CosetRepList,
    MembershipOracle,
    centralizer_in_sym,
    conjugacy_test,
    conjugate_count,
    double_coset_membership,
    double_coset_reps,
    enumerate_coset_reps,
    intersect_with_recognizable,
    lex_first,
    move_coset,
    normalizer,
    subgroup_from_membership,
)
from .groups import (
    Permutation,
    PermGroup,
    Subcoset,
    alt_group,
    bsgs_build,
    direct_product_on_disjoint_supports,
    even_part,
    group_order,
    is_subgroup,
    membership_test,
    orbits,
    parse_permutation,
    parse_permutation_list,
    point_stabilizer,
    reduce_generators,
    restrict_action,
    same_group,
    subgroup_index,
    sym_group,
)
from .lattice import SubgroupClass, low_index_classes, subgroup_classes
from .multiset import Multiset
from .multissr import (
    OracleBundle,
    SsrInstance,
    brute_subsum,
    consolidate,
    remove,
    threshold_enumerate,
    tri_solve,
)
from .slp import (
    Presentation,
    StraightLineProgram,
    first_failing_relator,
    presentation_from_group,
    slp_evaluate,
    slp_from_text,
    slp_to_text,
    verify_partial_hom,
)

__version__ = "0.1.0"
