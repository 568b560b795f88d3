"""
Polynomials over F_2^d through galois: root finding and reduction.

Coefficient lists are field encodings ordered from the constant term up.
"""

import logging
from functools import lru_cache
from typing import List, Sequence, Tuple, Type

import galois

from algebra.gf2k import FieldSpec

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def galois_field(spec: FieldSpec) -> Type[galois.FieldArray]:
    """galois class for F_2[x]/(spec.modulus); element ints keep our bit encoding"""
    if spec.extension_degree == 1:
        return galois.GF2
    return galois.GF(
        2 ** spec.extension_degree,
        irreducible_poly=galois.Poly.Int(spec.modulus.bits),
        verify=False,
    )


def to_poly(spec: FieldSpec, coefficients: Sequence[int]) -> galois.Poly:
    return galois.Poly(list(coefficients) or [0], field=galois_field(spec), order="asc")


def from_poly(poly: galois.Poly, length: int) -> Tuple[int, ...]:
    """Ascending coefficients of poly, zero-padded to length"""
    coefficients = [int(c) for c in poly.coeffs[::-1]]
    if len(coefficients) > length:
        raise ValueError(f"{poly} does not fit in {length} coefficients")
    return tuple(coefficients) + (0,) * (length - len(coefficients))


def evaluate(spec: FieldSpec, coefficients: Sequence[int], point: int) -> int:
    field = galois_field(spec)
    return int(to_poly(spec, coefficients)(field(point)))


def mul_mod(spec: FieldSpec, a: Sequence[int], b: Sequence[int], modulus: Sequence[int]) -> Tuple[int, ...]:
    """a * b mod modulus, as deg(modulus) ascending coefficients"""
    m = to_poly(spec, modulus)
    product = (to_poly(spec, a) * to_poly(spec, b)) % m
    return from_poly(product, m.degree)


def find_roots(spec: FieldSpec, coefficients: Sequence[int]) -> List[int]:
    """
    Sorted roots in F_2^d of a polynomial that splits into distinct linear factors.

    Raises:
        ValueError: if the polynomial is constant or does not split over the field
    """
    f = to_poly(spec, coefficients)
    if f.degree < 1:
        raise ValueError("A constant polynomial has no roots to find")
    f = galois.Poly(f.coeffs / f.coeffs[0])
    x = galois.Poly([1, 0], field=f.field)
    # f splits into distinct linear factors iff f | x^(2^d) - x
    if pow(x, spec.order, f) != x % f:
        raise ValueError(f"{f} does not split into distinct linear factors over F_2^{spec.extension_degree}")
    factors = [f] if f.degree == 1 else f.equal_degree_factors(1)
    # char 2: the root of x + r is r
    roots = sorted(int(factor.coeffs[-1]) for factor in factors)
    logger.debug("Roots of %s in F_2^%d: %s", f, spec.extension_degree, roots)
    return roots
