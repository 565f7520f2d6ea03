"""Homological combinatorics of the Nakayama algebras ``Lambda(m, l)``."""

from .core import (
    Algebra,
    InvalidAlgebraError,
    ModCoord,
    ZERO,
    ZeroModuleError,
    global_dim,
    indecomposables,
    make_algebra,
    proj_dim,
)
from .modset import ModSet
from .tilting import admits_nct, build_nct, d_rep_finite, is_nct

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "InvalidAlgebraError",
    "ModCoord",
    "ModSet",
    "ZERO",
    "ZeroModuleError",
    "admits_nct",
    "build_nct",
    "d_rep_finite",
    "global_dim",
    "indecomposables",
    "is_nct",
    "make_algebra",
    "proj_dim",
]
