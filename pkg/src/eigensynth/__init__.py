"""Logical quantum gate synthesis by seed-operator interpolation."""
from .interpolation import (
    Alphabet,
    DegenerateAlphabetError,
    LogicalOperator,
    SeedOperator,
    SpectralFamily,
    TruthTable,
    as_seed_polynomial,
    lift,
    projectors_from_seed,
    synthesize,
    verify_eigenlogic,
)
from .matrix_core import adjoint, apply, expm, kron, matmul, max_abs_diff

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "DegenerateAlphabetError",
    "LogicalOperator",
    "SeedOperator",
    "SpectralFamily",
    "TruthTable",
    "adjoint",
    "apply",
    "as_seed_polynomial",
    "expm",
    "kron",
    "lift",
    "matmul",
    "max_abs_diff",
    "projectors_from_seed",
    "synthesize",
    "verify_eigenlogic",
]
