"""Decomposition matrices of Brauer algebras B_n(delta) over C.

Blocks, valley sets and hypercubes give each row of the decomposition matrix
in closed form; the ``oracle`` subpackage recomputes simple dimensions from
diagram arithmetic to check it.
"""
from .decomp import (BlockReport, CartanMatrix, DecompMatrix, DecompRow, blocks, cartan, decomp_matrix,
                     decomp_row, export, hypercube_shoulder, is_unitriangular, poly_table)
from .klpoly import GeEdge, PolyRow, ge_neighbors, kl_equals_cube, kl_row
from .tlcube import Hypercube, TLDiagram, bump01, bump10, cube_double, gamma_all, gamma_lower, hypercube, tl_diagram
from .valley import (HalfIntSeq, block_down_neighbors, block_up_neighbors, e_delta, is_mibs, is_mibs_geometric,
                     o_delta, o_delta_inverse, reg, same_block, singularity, transport_f_i)
from .young import Box, Partition, charge, conjugate, dim_delta, enumerate_lambda_n

__version__ = "0.1.0"

__all__ = [
    "BlockReport", "Box", "CartanMatrix", "DecompMatrix", "DecompRow", "GeEdge", "HalfIntSeq", "Hypercube",
    "Partition", "PolyRow", "TLDiagram", "block_down_neighbors", "block_up_neighbors", "blocks", "bump01",
    "bump10", "cartan", "charge", "conjugate", "cube_double", "decomp_matrix", "decomp_row", "dim_delta",
    "e_delta", "enumerate_lambda_n", "export", "gamma_all", "gamma_lower", "ge_neighbors", "hypercube",
    "hypercube_shoulder", "is_mibs", "is_mibs_geometric", "is_unitriangular", "kl_equals_cube", "kl_row",
    "o_delta", "o_delta_inverse", "poly_table", "reg", "same_block", "singularity", "tl_diagram",
    "transport_f_i",
]
