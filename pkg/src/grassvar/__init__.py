"""Exact rank and support varieties for modules over k[x1..xc]/(x1^p..xc^p).

The package computes, over prime fields: minimal free resolutions and Ext
dimensions of finite-dimensional modules; the classical rank variety of a
module or pair of modules as an ideal in F_p[a1..ac]; and its higher
analogue inside a Grassmannian of d-planes, realized in Pluecker coordinates
by exact Groebner-basis elimination.  Everything is integer arithmetic;
there are no floating-point tolerances anywhere in the results.
"""

from .errors import (
    GroebnerBudgetError,
    MinorLimitError,
    ResourceLimitError,
    SubspaceLimitError,
    SyzygyLimitError,
)
from .fp import MatrixFp, PrimeField
from .grassmann import (
    PlueckerPoint,
    Subspace,
    VarietyIdealD,
    beta_frobenius,
    enumerate_subspaces,
    gaussian_binomial,
    higher_variety_ideal,
    incidence_ideal,
    incidence_ring,
    oracle_membership,
    pluecker_embed,
    pluecker_relations,
    pluecker_ring,
    point_on_variety,
    project_incidence,
    subspace_from_rows,
    subspaces_on_variety,
    variety_dim_projective,
)
from .homology import (
    ExtTable,
    ResolutionData,
    betti_numbers,
    ext_dims,
    ext_eventually_zero,
    resolve,
    syzygy_step,
)
from .modules import (
    KEModule,
    LinearForm,
    action_of,
    direct_sum,
    dual,
    is_free_over_line,
    jordan_type,
    module_from_dict,
    module_to_dict,
    quotient_by_linear_forms,
    regular_module,
    restrict_to_subspace,
    validate,
    zero_module,
)
from .poly import (
    Ideal,
    MonomialOrder,
    Polynomial,
    PolyRing,
    buchberger_reduced,
    eliminate,
    ideal,
    ideal_dimension,
    ideal_intersect,
    normal_form,
    radical_contains,
    radical_equal,
    radical_member,
    saturate,
    saturate_wrt_ideal,
)
from .rankvariety import (
    VarietyIdeal1,
    coordinate_ring,
    pair_variety_ideal,
    point_in_rank_variety,
    rank_variety_ideal,
    rational_points,
)

__version__ = "0.1.0"

__all__ = [
    "GroebnerBudgetError",
    "MinorLimitError",
    "ResourceLimitError",
    "SubspaceLimitError",
    "SyzygyLimitError",
    "MatrixFp",
    "PrimeField",
    "PlueckerPoint",
    "Subspace",
    "VarietyIdeal1",
    "VarietyIdealD",
    "beta_frobenius",
    "enumerate_subspaces",
    "gaussian_binomial",
    "higher_variety_ideal",
    "incidence_ideal",
    "incidence_ring",
    "oracle_membership",
    "pluecker_embed",
    "pluecker_relations",
    "pluecker_ring",
    "point_on_variety",
    "project_incidence",
    "subspace_from_rows",
    "subspaces_on_variety",
    "variety_dim_projective",
    "ExtTable",
    "ResolutionData",
    "betti_numbers",
    "ext_dims",
    "ext_eventually_zero",
    "resolve",
    "syzygy_step",
    "KEModule",
    "LinearForm",
    "action_of",
    "direct_sum",
    "dual",
    "is_free_over_line",
    "jordan_type",
    "module_from_dict",
    "module_to_dict",
    "quotient_by_linear_forms",
    "regular_module",
    "restrict_to_subspace",
    "validate",
    "zero_module",
    "Ideal",
    "MonomialOrder",
    "Polynomial",
    "PolyRing",
    "buchberger_reduced",
    "eliminate",
    "ideal",
    "ideal_dimension",
    "ideal_intersect",
    "normal_form",
    "radical_contains",
    "radical_equal",
    "radical_member",
    "saturate",
    "saturate_wrt_ideal",
    "coordinate_ring",
    "pair_variety_ideal",
    "point_in_rank_variety",
    "rank_variety_ideal",
    "rational_points",
    "__version__",
]
