"""
Local expansions at places of F_2(x) and their inversion by CRT.

At a finite place p of degree d with multiplicity 2 the expansion is
f = T(f0) + f1 * p mod p^2, where T(r) = r^(2^d) mod p^2 is the multiplicative
(Teichmuller) lift. This makes F_2[x]/(p^2) -> F_2^d[t]/(t^2) a ring isomorphism,
so products of expansions follow the truncated product rule.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from algebra.bitmatrix import BitMatrix
from algebra.gf2k import BinaryPoly, FieldSpec, poly_inverse_mod, poly_powmod
from algebra.roots import find_roots
from construction.places import EvaluationPlan, Place

logger = logging.getLogger(__name__)

# One tuple of digits per plan assignment; finite digits live in F_2[x]/(p), infinity digits are bits
ResidueVector = Tuple[Tuple[int, ...], ...]


class InconsistentResiduesError(ValueError):
    """Residues that no polynomial within the degree bound produces"""


def teichmuller(r: BinaryPoly, p: BinaryPoly) -> BinaryPoly:
    """r^(2^d) mod p^2, the lift of r mod p that respects products"""
    return poly_powmod(r, 1 << p.degree, p * p)


def local_expansion(f: BinaryPoly, place: Place, u: int, degree_bound: Optional[int] = None) -> Tuple[int, ...]:
    """
    First u digits of f at the place.

    Args:
        f: polynomial to expand
        place: finite place or infinity
        u: 1 or 2
        degree_bound: degree f is read against at infinity (x^bound is the leading digit)

    Returns:
        Tuple of u digits (bit masks)
    """
    if u not in (1, 2):
        raise ValueError(f"Multiplicity must be 1 or 2, got {u}")
    if place.is_infinity:
        if degree_bound is None:
            raise ValueError("Expansion at infinity needs a degree bound")
        if f.degree > degree_bound:
            raise ValueError(f"{f} exceeds the degree bound {degree_bound}")
        return tuple(f.coefficient(degree_bound - i) for i in range(u))
    p = place.modulus
    f0 = f % p
    if u == 1:
        return (f0.bits,)
    f1 = ((f + teichmuller(f0, p)) % (p * p)) // p
    return (f0.bits, f1.bits)


def ev_P(f: BinaryPoly, place: Place, u: int, degree_bound: Optional[int] = None) -> Tuple[int, ...]:
    return local_expansion(f, place, u, degree_bound)


def evaluate_plan(plan: EvaluationPlan, f: BinaryPoly, degree_bound: Optional[int] = None) -> ResidueVector:
    bound = 2 * plan.n - 2 if degree_bound is None else degree_bound
    return tuple(local_expansion(f, a.place, a.u, bound) for a in plan.assignments)


def crt(residues: Sequence[BinaryPoly], moduli: Sequence[BinaryPoly]) -> Tuple[BinaryPoly, BinaryPoly]:
    """
    Chinese remaindering in F_2[x] for pairwise coprime moduli.

    Returns:
        (h, M) with h = residues[i] mod moduli[i] and deg h < deg M
    """
    total = BinaryPoly(1)
    for m in moduli:
        total = total * m
    h = BinaryPoly(0)
    for r, m in zip(residues, moduli):
        cofactor = total // m
        h = h + r * cofactor * poly_inverse_mod(cofactor, m)
    return h % total, total


def reconstruct(
    plan: EvaluationPlan,
    residues: ResidueVector,
    degree_bound: Optional[int] = None,
    strict: bool = True,
) -> BinaryPoly:
    """
    The polynomial of degree <= bound (default 2n - 2) with the given expansions.

    Infinity digits fix the top coefficients; they are removed before CRT over p^u.
    With strict=False, coefficients above the bound are dropped instead of raising,
    which keeps the map linear on all inputs.
    """
    if len(residues) != len(plan.assignments):
        raise ValueError(f"Expected {len(plan.assignments)} residue tuples, got {len(residues)}")
    bound = 2 * plan.n - 2 if degree_bound is None else degree_bound

    top = 0
    free_degree = bound
    for a, digits in zip(plan.assignments, residues):
        if len(digits) != a.u:
            raise ValueError(f"Place {a.place} expects {a.u} digits, got {len(digits)}")
        if not a.place.is_infinity:
            continue
        for i, digit in enumerate(digits):
            if bound - i >= 0:
                top |= (digit & 1) << (bound - i)
            elif digit and strict:
                raise InconsistentResiduesError("Nonzero digit below x^0 at infinity")
        free_degree = bound - a.u
    top_poly = BinaryPoly(top)

    targets, moduli = [], []
    for a, digits in zip(plan.assignments, residues):
        if a.place.is_infinity:
            continue
        p = a.place.modulus
        if a.u == 1:
            target, modulus = BinaryPoly(digits[0]) % p, p
        else:
            modulus = p * p
            target = (teichmuller(BinaryPoly(digits[0]), p) + BinaryPoly(digits[1]) * p) % modulus
        targets.append(target + top_poly % modulus)
        moduli.append(modulus)

    h, total = crt(targets, moduli)
    if total.degree <= free_degree:
        raise ValueError(f"Plan capacity does not determine polynomials of degree <= {bound}")
    if h.degree > free_degree:
        if strict:
            raise InconsistentResiduesError(
                f"Residues are not the expansions of any polynomial of degree <= {bound}"
            )
        h = BinaryPoly(h.bits & ((1 << max(free_degree + 1, 0)) - 1))
    return h + top_poly


@lru_cache(maxsize=None)
def residue_isomorphism(place: Place) -> Tuple[BitMatrix, BitMatrix]:
    """
    F_2[x]/(p) -> canonical F_2^d sending x to the smallest root of p, and its inverse.
    """
    d = place.degree
    if place.is_infinity:
        identity = BitMatrix(1, (1,))
        return identity, identity
    canonical = FieldSpec.canonical(d)
    rho = find_roots(canonical, list(place.modulus.coefficients()))[0]
    forward = BitMatrix(d, tuple(canonical.power(rho, i) for i in range(d)))
    return forward, forward.inverse()


def transport_digits(place: Place, digits: Sequence[int]) -> List[int]:
    forward, _ = residue_isomorphism(place)
    return [forward.apply(v) for v in digits]
