"""Exact computer algebra for Lie 2-bialgebras, crossed modules and r-matrices."""

from .bigbracket import SElement, big_bracket, gen, odot, relabel_dual
from .calculus import (InfinitesimalPair, QuasiTriple, a_k_bracket, build_partial, check_ID,
                       check_quasi_triple, coboundary_pair, cocycle_check, differential_commutator,
                       in_W_k, is_k_differential)
from .classical import ENCODING_CONSTANTS, StructureMaps, calibrate, decode, encode
from .coboundary import (RMatrix, coboundary_triple, dual_crossed_module, general_cocycle_triple,
                         is_r_matrix, lambda_r)
from .multilinear import (LieAlgebra, LinearMap, Multivector, Space, basis, d_phi,
                          extend_derivation, interior, project_bigrade, schouten,
                          series_operator, wedge)
from .report import Report
from .structures import (CrossedModule, LieBialgebraCrossedModule, is_crossed_module,
                         is_lie_bialgebra, is_lie_bialgebra_crossed_module, semidirect_product,
                         swap_duality, verify_weak_lie2_algebra, verify_weak_lie2_bialgebra,
                         verify_weak_lie2_coalgebra)
from .verify import verify

__version__ = "0.1.0"

__all__ = [
    "SElement", "big_bracket", "gen", "odot", "relabel_dual",
    "InfinitesimalPair", "QuasiTriple", "a_k_bracket", "build_partial", "check_ID",
    "check_quasi_triple", "coboundary_pair", "cocycle_check", "differential_commutator", "in_W_k",
    "is_k_differential", "ENCODING_CONSTANTS", "StructureMaps", "calibrate", "decode",
    "encode", "RMatrix", "coboundary_triple", "dual_crossed_module", "general_cocycle_triple",
    "is_r_matrix", "lambda_r", "LieAlgebra", "LinearMap", "Multivector",
    "Space", "basis", "d_phi", "extend_derivation", "interior",
    "project_bigrade", "schouten", "series_operator", "wedge", "Report",
    "CrossedModule", "LieBialgebraCrossedModule", "is_crossed_module", "is_lie_bialgebra", "is_lie_bialgebra_crossed_module",
    "semidirect_product", "swap_duality", "verify_weak_lie2_algebra", "verify_weak_lie2_bialgebra", "verify_weak_lie2_coalgebra",
    "verify",
]
