"""Additive codes over mixed alphabets Z_p x Z_{p^2} x ... x Z_{p^k}."""
from .additive import (AdditiveCode, MixedAlphabet, MixedWord, code_from_check, code_from_generators,
                       dual, inner_product, min_distance, random_code, scalar_mul, weights)
from .codefile import CodeDocument, InvalidDocument, read_document, write_document
from .errors import BudgetExceeded, InvalidInput, NonIntegralDivision, ZpkError
from .gray import GrayTables, build_gray_tables, phi_map, varphi_image, varphi_size
from .kernels import BACKEND
from .perfect import (StructuredCheckMatrix, build_perfect_check, perfect_params, validate_check_matrix,
                      verify_perfect_exhaustive, verify_perfect_syndrome)
from .wenum import BiPoly, SWPoly, duality_check, macwilliams_transform, sw_polynomial
from .zring import PrimePower, Residue

__version__ = "0.1.0"

__all__ = [
    "AdditiveCode", "MixedAlphabet", "MixedWord", "code_from_check", "code_from_generators", "dual",
    "inner_product", "min_distance", "random_code", "scalar_mul", "weights",
    "CodeDocument", "InvalidDocument", "read_document", "write_document",
    "BudgetExceeded", "InvalidInput", "NonIntegralDivision", "ZpkError",
    "GrayTables", "build_gray_tables", "phi_map", "varphi_image", "varphi_size", "BACKEND",
    "StructuredCheckMatrix", "build_perfect_check", "perfect_params", "validate_check_matrix",
    "verify_perfect_exhaustive", "verify_perfect_syndrome",
    "BiPoly", "SWPoly", "duality_check", "macwilliams_transform", "sw_polynomial",
    "PrimePower", "Residue",
]
