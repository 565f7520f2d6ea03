"""Independent brute-force verifier built on explicit matrix representations."""

from .homology import (
    ExtTable,
    Oracle,
    Resolution,
    check_ar_sequence,
    cosyzygy_rep,
    ext_dim,
    ext_table,
    get_oracle,
    injective_envelope,
    min_resolution,
    syzygy_rep,
)
from .representation import (
    KupischAlgebra,
    KupischError,
    RelationError,
    Representation,
    as_kupisch,
    decompose,
    direct_sum,
    hom_basis,
    hom_dim,
    homogeneous_kupisch,
    kupisch_algebra,
    projective_cover,
    to_matrices,
)
from .search import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    exhaustive_nct_search,
    is_nct,
    left_support,
    right_support,
)

__all__ = [
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "ExtTable",
    "KupischAlgebra",
    "KupischError",
    "Oracle",
    "RelationError",
    "Representation",
    "Resolution",
    "as_kupisch",
    "check_ar_sequence",
    "cosyzygy_rep",
    "decompose",
    "direct_sum",
    "exhaustive_nct_search",
    "ext_dim",
    "ext_table",
    "get_oracle",
    "hom_basis",
    "hom_dim",
    "homogeneous_kupisch",
    "injective_envelope",
    "is_nct",
    "kupisch_algebra",
    "left_support",
    "min_resolution",
    "projective_cover",
    "right_support",
    "syzygy_rep",
    "to_matrices",
]
