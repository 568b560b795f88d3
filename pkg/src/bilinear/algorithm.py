"""
Bilinear multiplication algorithms for F_2^n over F_2.

An algorithm of rank r is a list of r triples (a_l, b_l, c_l) with
x * y = sum_l <a_l, x> <b_l, y> c_l for every x, y in the field.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from algebra.bitmatrix import parity
from algebra.gf2k import BinaryPoly, FieldElement, FieldSpec
from utils.serialization import from_hex, hex_list, to_hex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankBudget:
    """Unit multiplication costs of the base formulas"""

    mu1: int = 1
    mu2: int = 3
    mu4: int = 9
    mhat2: int = 3

    def mu(self, degree: int) -> int:
        costs = {1: self.mu1, 2: self.mu2, 4: self.mu4}
        if degree not in costs:
            raise ValueError(f"No base formula for degree {degree}")
        return costs[degree]

    def local_cost(self, degree: int, u: int) -> int:
        """Multiplications for one evaluation of multiplicity u at a place of the given degree"""
        if u == 1:
            return self.mu(degree)
        if u == 2:
            return self.mhat2 * self.mu(degree)
        raise ValueError(f"Multiplicity {u} is not supported")


RANK_BUDGET = RankBudget()


@dataclass(frozen=True)
class BilinearAlgorithm:
    field: FieldSpec
    a_forms: Tuple[int, ...]
    b_forms: Tuple[int, ...]
    c_vecs: Tuple[int, ...]

    def __post_init__(self):
        if not len(self.a_forms) == len(self.b_forms) == len(self.c_vecs):
            raise ValueError("a_forms, b_forms and c_vecs must have the same length")
        if not self.a_forms:
            raise ValueError("Rank must be at least 1")
        for v in (*self.a_forms, *self.b_forms, *self.c_vecs):
            if v < 0 or v >> self.n:
                raise ValueError(f"Vector {v:#x} does not fit in {self.n} bits")

    @property
    def n(self) -> int:
        return self.field.extension_degree

    @property
    def rank(self) -> int:
        return len(self.a_forms)

    def evaluate_bits(self, x: int, y: int) -> int:
        z = 0
        for a, b, c in zip(self.a_forms, self.b_forms, self.c_vecs):
            if parity(a & x) and parity(b & y):
                z ^= c
        return z

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "rank": self.rank,
            "modulus": self.field.modulus.to_hex(),
            "a": hex_list(self.a_forms),
            "b": hex_list(self.b_forms),
            "c": hex_list(self.c_vecs),
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "BilinearAlgorithm":
        try:
            n = int(data["n"])
            field = FieldSpec(n, BinaryPoly(from_hex(data["modulus"])))
            alg = cls(
                field=field,
                a_forms=tuple(from_hex(v) for v in data["a"]),
                b_forms=tuple(from_hex(v) for v in data["b"]),
                c_vecs=tuple(from_hex(v) for v in data["c"]),
            )
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed algorithm JSON: {e}")
        if "rank" in data and int(data["rank"]) != alg.rank:
            raise ValueError(f"Declared rank {data['rank']} does not match {alg.rank} triples")
        return alg


def evaluate(alg: BilinearAlgorithm, x: FieldElement, y: FieldElement) -> FieldElement:
    """
    Compute x * y with exactly alg.rank bit products.

    Args:
        alg: algorithm over x.spec
        x, y: factors

    Returns:
        The product as a FieldElement
    """
    if x.spec != alg.field or y.spec != alg.field:
        raise ValueError("Inputs do not belong to the algorithm's field")
    return alg.field.element(alg.evaluate_bits(x.value.bits, y.value.bits))


def zero_output(alg: BilinearAlgorithm, index: int) -> BilinearAlgorithm:
    """Copy of alg with one output vector cleared"""
    c_vecs: List[int] = list(alg.c_vecs)
    c_vecs[index] = 0
    return BilinearAlgorithm(alg.field, alg.a_forms, alg.b_forms, tuple(c_vecs))


def describe(alg: BilinearAlgorithm) -> str:
    lines = [f"F_2^{alg.n} = F_2[x]/({alg.field.modulus}), rank {alg.rank}"]
    width = max(1, (alg.n + 3) // 4)
    for l, (a, b, c) in enumerate(zip(alg.a_forms, alg.b_forms, alg.c_vecs)):
        lines.append(f"  m{l}: a={to_hex(a):>{width}} b={to_hex(b):>{width}} c={to_hex(c):>{width}}")
    return "\n".join(lines)
