"""Crystal combinatorics on e-restricted partitions.

Abacus displays and roof/base e-cores, Kashiwara operators on restricted
(multi)partitions, LS-path direction data with exact rational masses, the
Mullineux map, and non-recursive membership criteria for highest-weight
components of tensor crystals.
"""

from .abacus import (
    BetaSet,
    base,
    base_incremental,
    down_step,
    from_beta,
    roof,
    runner_maxima,
    to_beta,
    up_step,
)
from .crystal import (
    WeightVector,
    core_to_coset,
    coset_to_core,
    crystal_closure,
    e_op,
    eps,
    f,
    is_e_core,
    is_s_i_core,
    level_pairing,
    phi,
    reduce_signature,
    weight,
    weyl_s,
)
from .kleshchev import (
    KleshchevVerdict,
    fayers_e3_check,
    in_demazure_lower,
    in_demazure_upper,
    is_kleshchev_bipartition,
    is_kleshchev_multi,
    mathas_e2_check,
    tau,
)
from .partitions import (
    Multipartition,
    Partition,
    boundary_nodes,
    conjugate,
    contains,
    is_e_restricted,
)
from .paths import StretchedElement, ceil, floor, ls_path, mullineux, stretched_f

__all__ = [
    "BetaSet",
    "KleshchevVerdict",
    "Multipartition",
    "Partition",
    "StretchedElement",
    "WeightVector",
    "base",
    "base_incremental",
    "boundary_nodes",
    "ceil",
    "conjugate",
    "contains",
    "core_to_coset",
    "coset_to_core",
    "crystal_closure",
    "down_step",
    "e_op",
    "eps",
    "f",
    "fayers_e3_check",
    "floor",
    "from_beta",
    "in_demazure_lower",
    "in_demazure_upper",
    "is_e_core",
    "is_e_restricted",
    "is_kleshchev_bipartition",
    "is_kleshchev_multi",
    "is_s_i_core",
    "level_pairing",
    "ls_path",
    "mathas_e2_check",
    "mullineux",
    "phi",
    "reduce_signature",
    "roof",
    "runner_maxima",
    "stretched_f",
    "tau",
    "to_beta",
    "up_step",
    "weight",
    "weyl_s",
]
