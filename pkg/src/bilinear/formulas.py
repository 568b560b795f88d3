"""
Base formulas: rank 1 for F_2, Karatsuba for F_4, nested Karatsuba for F_16,
and the three-multiplication truncated product modulo t^2
"""

from functools import lru_cache

from algebra.gf2k import FieldSpec
from bilinear import relative
from bilinear.algorithm import RANK_BUDGET, BilinearAlgorithm
from bilinear.compose import compose
from bilinear.relative import RelativeAlgorithm

BASE_DEGREES = (1, 2, 4)


def identity1() -> BilinearAlgorithm:
    return BilinearAlgorithm(FieldSpec.canonical(1), (1,), (1,), (1,))


def karatsuba2() -> BilinearAlgorithm:
    """
    F_4 = F_2[x]/(x^2 + x + 1) with m0 = x0 y0, m1 = x1 y1, m2 = (x0 + x1)(y0 + y1):
    z0 = m0 + m1, z1 = m0 + m2.
    """
    return BilinearAlgorithm(
        field=FieldSpec.canonical(2),
        a_forms=(0b01, 0b10, 0b11),
        b_forms=(0b01, 0b10, 0b11),
        c_vecs=(0b11, 0b01, 0b10),
    )


def nested4() -> BilinearAlgorithm:
    """Karatsuba over F_4 with each F_4 product done by karatsuba2: rank 9 for F_16"""
    return compose(relative.karatsuba(FieldSpec.canonical(2)), karatsuba2())


def truncated2(d: int) -> RelativeAlgorithm:
    if d not in BASE_DEGREES:
        raise ValueError(f"Truncated products are only provided over F_2^d for d in {BASE_DEGREES}")
    return relative.truncated2(FieldSpec.canonical(d))


@lru_cache(maxsize=None)
def base_algorithm(d: int) -> BilinearAlgorithm:
    """Rank-mu(d) algorithm for the canonical F_2^d"""
    builders = {1: identity1, 2: karatsuba2, 4: nested4}
    if d not in builders:
        raise ValueError(f"No base formula for F_2^{d}")
    alg = builders[d]()
    assert alg.rank == RANK_BUDGET.mu(d)
    return alg
