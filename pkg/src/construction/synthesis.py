"""
Synthesis of multiplication algorithms for F_2^n by evaluation at places of
F_2(x) of degree 1, 2 and 4 (with first derivatives) and CRT interpolation
"""

import logging
from functools import lru_cache
from typing import List, Tuple

from algebra.bitmatrix import BitMatrix
from algebra.gf2k import BinaryPoly, FieldSpec
from bilinear.algorithm import BilinearAlgorithm
from bilinear.compose import compose, coprime_split, expand
from bilinear.formulas import base_algorithm, truncated2
from bilinear.relative import lift
from bilinear.verify import MAX_VERIFY_DEGREE
from construction.evaluation import local_expansion, reconstruct, residue_isomorphism, transport_digits
from construction.places import MAX_PLAN_N, Assignment, EvaluationPlan, plan_places

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def local_algorithm(d: int, u: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    """
    Forms on the u*d local bits (digit k at bits k*d ... k*d + d - 1) of the
    canonical F_2^d[t]/(t^u).
    """
    base = base_algorithm(d)
    if u == 1:
        return base.a_forms, base.b_forms, base.c_vecs
    a_rows, b_rows, c_vecs = expand(truncated2(d), base)
    return tuple(a_rows), tuple(b_rows), tuple(c_vecs)


def input_map(assignment: Assignment, n: int) -> BitMatrix:
    """Coefficients of x (degree <= n - 1) -> canonical local digits"""
    place, u, d = assignment.place, assignment.u, assignment.place.degree
    columns = []
    for j in range(n):
        digits = transport_digits(place, local_expansion(BinaryPoly.monomial(j), place, u, n - 1))
        col = 0
        for k, digit in enumerate(digits):
            col |= digit << (k * d)
        columns.append(col)
    return BitMatrix(u * d, tuple(columns))


def output_map(plan: EvaluationPlan, index: int, field: FieldSpec) -> BitMatrix:
    """Canonical local digits of one assignment -> reduced product coefficients"""
    assignment = plan.assignments[index]
    d = assignment.place.degree
    _, backward = residue_isomorphism(assignment.place)
    empty = [(0,) * a.u for a in plan.assignments]
    columns = []
    for b in range(assignment.u * d):
        # basis vector: bit i of canonical digit k, pulled back to F_2[x]/(p)
        k, i = divmod(b, d)
        digits = [0] * assignment.u
        digits[k] = backward.apply(1 << i)
        # zero at every other place, so CRT gives this column's contribution alone
        residues = list(empty)
        residues[index] = tuple(digits)
        h = reconstruct(plan, tuple(residues), strict=False)
        columns.append((h % field.modulus).bits)
    return BitMatrix(field.extension_degree, tuple(columns))


def synthesize_from_plan(plan: EvaluationPlan) -> BilinearAlgorithm:
    n = plan.n
    field = FieldSpec.canonical(n)
    a_forms: List[int] = []
    b_forms: List[int] = []
    c_vecs: List[int] = []
    for index, assignment in enumerate(plan.assignments):
        local_a, local_b, local_c = local_algorithm(assignment.place.degree, assignment.u)
        e_in = input_map(assignment, n)
        r_out = output_map(plan, index, field)
        a_forms.extend(e_in.pull_back(a) for a in local_a)
        b_forms.extend(e_in.pull_back(b) for b in local_b)
        c_vecs.extend(r_out.apply(c) for c in local_c)
        logger.debug("Place %s u=%d contributes %d products", assignment.place, assignment.u, len(local_a))
    alg = BilinearAlgorithm(field, tuple(a_forms), tuple(b_forms), tuple(c_vecs))
    if alg.rank != plan.rank_formula:
        raise ArithmeticError(f"Rank {alg.rank} differs from the plan accounting {plan.rank_formula}")
    return alg


def synthesize_composite(n: int) -> BilinearAlgorithm:
    """
    F_2^n for n > 17 as F_2^m with coefficients lifted to F_2^k, n = m k, gcd(m, k) = 1.
    """
    if n > MAX_VERIFY_DEGREE:
        raise ValueError(f"Composite synthesis supports n <= {MAX_VERIFY_DEGREE}, got {n}")
    m, k = coprime_split(n, MAX_PLAN_N)
    logger.info("Synthesizing F_2^%d as F_2^%d over F_2^%d", n, k, m)
    inner = synthesize(m)
    outer = lift(synthesize(k), inner.field)
    return compose(outer, inner)


def synthesize(n: int) -> BilinearAlgorithm:
    """
    Multiplication algorithm for the canonical F_2^n.

    Args:
        n: extension degree, 1 <= n <= 17 directly, larger n by composition

    Returns:
        BilinearAlgorithm whose rank equals the plan cost
    """
    if n < 1:
        raise ValueError(f"Extension degree must be positive, got {n}")
    if n > MAX_PLAN_N:
        return synthesize_composite(n)
    plan = plan_places(n)
    alg = synthesize_from_plan(plan)
    logger.info("Synthesized rank-%d algorithm for F_2^%d", alg.rank, n)
    return alg
