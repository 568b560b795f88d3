"""Binary polynomials, finite fields F_2^d and F_2-linear algebra"""
from .gf2k import (
    BinaryPoly, FieldSpec, FieldElement,
    poly_mul, poly_divmod, poly_gcd, poly_powmod, poly_inverse_mod,
    is_irreducible, irreducibles_of_degree, necklace_count, canonical_modulus,
    field_mul, field_mul_array,
)
from .bitmatrix import BitMatrix, parity
from .roots import find_roots

__all__ = [
    'BinaryPoly', 'FieldSpec', 'FieldElement',
    'poly_mul', 'poly_divmod', 'poly_gcd', 'poly_powmod', 'poly_inverse_mod',
    'is_irreducible', 'irreducibles_of_degree', 'necklace_count', 'canonical_modulus',
    'field_mul', 'field_mul_array',
    'BitMatrix', 'parity', 'find_roots',
]
