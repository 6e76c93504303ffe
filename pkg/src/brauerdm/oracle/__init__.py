"""Independent brute-force checks built on Brauer diagram arithmetic."""
from .cell import (GramMatrix, action_matrix, cell_gram, dim_identity_report, dim_simple,
                   generators, hom_dim, verify_dim_identity)
from .diagrams import (AlgebraElement, BrauerDiagram, all_diagrams, compose, cup_cap,
                       half_diagrams, identity, permutation_diagram, random_diagram, transposition)
from .specht import SpechtData, specht, standard_tableaux

__all__ = [
    "AlgebraElement", "BrauerDiagram", "GramMatrix", "SpechtData", "action_matrix", "all_diagrams",
    "cell_gram", "compose", "cup_cap", "dim_identity_report", "dim_simple", "generators",
    "half_diagrams", "hom_dim", "identity", "permutation_diagram", "random_diagram", "specht",
    "standard_tableaux", "transposition", "verify_dim_identity",
]
