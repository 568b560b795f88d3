"""
Composition of a relative algorithm over F_2^m with an algorithm for F_2^m over F_2
"""

import logging
from math import gcd
from typing import List, Tuple

from algebra.bitmatrix import BitMatrix, parity
from algebra.gf2k import FieldSpec
from algebra.roots import find_roots
from bilinear.algorithm import BilinearAlgorithm
from bilinear.relative import RelativeAlgorithm

logger = logging.getLogger(__name__)


def expand(outer: RelativeAlgorithm, inner: BilinearAlgorithm) -> Tuple[List[int], List[int], List[int]]:
    """
    Replace every host multiplication of outer by inner's rank-mu formula.

    Vectors live in tower coordinates: bit j*m + i is the coefficient of w^i in host coordinate j.

    Returns:
        (a_rows, b_rows, c_vecs) with outer.rank * inner.rank entries each
    """
    host = outer.host
    if inner.field != host:
        raise ValueError("Inner algorithm must multiply in the outer algorithm's host field")
    m = host.extension_degree

    def tower_row(form_entries, alpha: int) -> int:
        # host form A = (a_j) composed with the inner F_2-form alpha
        # bit (j, i) = alpha(a_j * w^i)
        row = 0
        for j, entry in enumerate(form_entries):
            if not entry:
                continue
            for i in range(m):
                if parity(alpha & host.mul(entry, 1 << i)):
                    row |= 1 << (j * m + i)
        return row

    def tower_vec(output_entries, c: int) -> int:
        # host coordinate j of the output is C_j * c
        vec = 0
        for j, entry in enumerate(output_entries):
            vec |= host.mul(entry, c) << (j * m)
        return vec

    a_rows, b_rows, c_vecs = [], [], []
    # one flat triple per (outer product, inner product) pair
    for A, B, C in zip(outer.a_forms, outer.b_forms, outer.c_vecs):
        for alpha, beta, c in zip(inner.a_forms, inner.b_forms, inner.c_vecs):
            a_rows.append(tower_row(A, alpha))
            b_rows.append(tower_row(B, beta))
            c_vecs.append(tower_vec(C, c))
    return a_rows, b_rows, c_vecs


def tower_basis(outer: RelativeAlgorithm, flat: FieldSpec) -> BitMatrix:
    """
    Columns omega^i * eta^j (index j*m + i) mapping tower coordinates into the flat field.

    omega is the smallest root of the host modulus and eta the smallest root of the
    outer modulus with its coefficients pushed through w -> omega.
    """
    host = outer.host
    m = host.extension_degree
    omega = find_roots(flat, list(host.modulus.coefficients()))[0]
    omega_powers = [flat.power(omega, i) for i in range(m)]

    def embed(h: int) -> int:
        out = 0
        for i in range(m):
            if (h >> i) & 1:
                out ^= omega_powers[i]
        return out

    eta = find_roots(flat, [embed(c) for c in outer.modulus])[0]
    logger.debug("Tower basis: omega=%x eta=%x in F_2[x]/(%s)", omega, eta, flat.modulus)
    columns = []
    for j in range(outer.n):
        eta_j = flat.power(eta, j)
        for i in range(m):
            columns.append(flat.mul(omega_powers[i], eta_j))
    return BitMatrix(flat.extension_degree, tuple(columns))


def compose(outer: RelativeAlgorithm, inner: BilinearAlgorithm) -> BilinearAlgorithm:
    """
    Algorithm for F_2^(mn) of rank outer.rank * inner.rank over the canonical flat field.

    Args:
        outer: algorithm for F_(2^m)^n over the host F_2^m
        inner: algorithm for the host over F_2

    Returns:
        BilinearAlgorithm with the tower/flat basis change folded into its forms
    """
    m, n = inner.n, outer.n
    if outer.host != inner.field:
        raise ValueError("Incompatible tower: outer host differs from inner field")
    flat = FieldSpec.canonical(m * n)
    try:
        psi = tower_basis(outer, flat)
        phi = psi.inverse()
    except ValueError as e:
        raise ValueError(f"Incompatible tower: outer modulus does not define F_2^{m * n} ({e})")

    a_rows, b_rows, c_tower = expand(outer, inner)
    alg = BilinearAlgorithm(
        field=flat,
        a_forms=tuple(phi.pull_back(r) for r in a_rows),
        b_forms=tuple(phi.pull_back(r) for r in b_rows),
        c_vecs=tuple(psi.apply(v) for v in c_tower),
    )
    logger.info("Composed rank %d x %d = %d algorithm for F_2^%d", outer.rank, inner.rank, alg.rank, m * n)
    return alg


def coprime_split(n: int, max_factor: int) -> Tuple[int, int]:
    """
    Smallest m >= 2 with m | n, k = n/m <= max_factor and gcd(m, k) = 1.

    Returns:
        (m, k)
    """
    for m in range(2, n):
        if n % m:
            continue
        k = n // m
        if k <= max_factor and m <= max_factor and gcd(m, k) == 1:
            return m, k
    raise ValueError(
        f"F_2^{n} cannot be composed: {n} has no factorization m * k with gcd(m, k) = 1 and 2 <= m, k <= {max_factor}"
    )
