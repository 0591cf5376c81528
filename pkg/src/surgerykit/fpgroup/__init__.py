"""Finitely presented group computations."""

from .coset import DEFAULT_BUDGET, CosetTable, Status, coset_enumerate
from .snf import AbelianInvariants, abelianization, relation_matrix, smith_diagonal
from .tietze import free_product, free_reduce, simplify_presentation

__all__ = [
    "AbelianInvariants",
    "CosetTable",
    "DEFAULT_BUDGET",
    "Status",
    "abelianization",
    "coset_enumerate",
    "free_product",
    "free_reduce",
    "relation_matrix",
    "simplify_presentation",
    "smith_diagonal",
]
