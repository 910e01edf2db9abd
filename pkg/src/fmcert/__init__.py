"""Exact Fourier-Motzkin elimination with fact-based pruning and Farkas certificates."""

from .fme import EliminationLog, eliminate, project
from .implication import (
    FarkasCertificate,
    is_implied,
    prune,
    systems_equivalent,
    verify_certificate,
)
from .lincore import (
    FactSet,
    Inequality,
    InequalitySystem,
    LinearExpression,
    SymbolTable,
    canonicalize,
    parse_system,
    serialize_system,
    substitute_variable,
)
from .lp import LpOutcome, lp_max

__all__ = [
    "EliminationLog", "FactSet", "FarkasCertificate", "Inequality", "InequalitySystem",
    "LinearExpression", "LpOutcome", "SymbolTable", "canonicalize", "eliminate",
    "is_implied", "lp_max", "parse_system", "project", "prune", "serialize_system",
    "substitute_variable", "systems_equivalent", "verify_certificate",
]
