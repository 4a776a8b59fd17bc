"""Induced matrix representations of knot groups.

Build induced representations of two-bridge knot groups from
finite-index subgroup data, certify their irreducibility numerically,
and verify dimension lower bounds for the character variety at desk
scale.
"""

__version__ = "0.1.0"

from .words import Alphabet, Word, apply_hom, conjugate, exponent_sum, invert, multiply
from .words import parse_word, reduce
from .presentations import (
    Presentation,
    TwoBridgeParams,
    change_generators,
    epsilon_sequence,
    two_bridge_presentation,
)
from .cosets import (
    CosetTable,
    PermRep,
    Permutation,
    coset_table,
    dihedral_rep,
    eval_perm,
    in_kernel,
    in_stabilizer,
    regular_perm_rep,
)
from .schreier import (
    Epimorphism,
    SchreierGenerator,
    SubgroupPresentation,
    kernel_coset_table,
    kernel_subgroup_generators,
    quotient_to_free,
    schreier_generators,
    subgroup_presentation,
)
from .matreps import (
    MatrixRep,
    ParentWordRep,
    abelian_twist,
    conjugate_rep,
    conjugated,
    direct_sum,
    induce,
    phi_direct_sum,
    random_sl,
    restrict,
    verify_relations,
)
from .analysis import (
    TraceVector,
    WordSample,
    algebra_dimension,
    character,
    characters_equal,
    commutant_dimension,
    fiber_sampling,
    res_ind_character_identity,
    summand_dimension_check,
)
from .cohomology import (
    DimReport,
    character_jacobian_rank,
    fox_derivative,
    fox_matrix,
    h1_dimension,
)
from .figure8 import (
    Figure8Bundle,
    build_bundle,
    mackey_check_figure8,
    run_figure8,
    verify_bundle,
)
