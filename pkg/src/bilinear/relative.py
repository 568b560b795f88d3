"""
Bilinear algorithms over a host field F_2^m instead of F_2.

Elements of the target algebra F_2^m[y]/(modulus) are tuples of host encodings
(constant coordinate first). Form and output entries are host elements too.
"""

from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple

from algebra import roots
from algebra.gf2k import FieldSpec
from bilinear.algorithm import BilinearAlgorithm

HostVector = Tuple[int, ...]


@dataclass(frozen=True)
class RelativeAlgorithm:
    host: FieldSpec
    modulus: HostVector  # monic, constant term first, length n + 1
    a_forms: Tuple[HostVector, ...]
    b_forms: Tuple[HostVector, ...]
    c_vecs: Tuple[HostVector, ...]

    def __post_init__(self):
        if len(self.modulus) < 2 or self.modulus[-1] != 1:
            raise ValueError("Modulus must be monic of degree >= 1")
        if not len(self.a_forms) == len(self.b_forms) == len(self.c_vecs):
            raise ValueError("a_forms, b_forms and c_vecs must have the same length")
        order = self.host.order
        for vec in (*self.a_forms, *self.b_forms, *self.c_vecs):
            if len(vec) != self.n:
                raise ValueError(f"Vector {vec} does not have {self.n} coordinates")
            if any(not 0 <= e < order for e in vec):
                raise ValueError(f"Vector {vec} has entries outside F_2^{self.host.extension_degree}")

    @property
    def n(self) -> int:
        return len(self.modulus) - 1

    @property
    def rank(self) -> int:
        return len(self.a_forms)

    def _dot(self, form: HostVector, x: Sequence[int]) -> int:
        acc = 0
        for f, v in zip(form, x):
            acc ^= self.host.mul(f, v)
        return acc

    def evaluate(self, x: Sequence[int], y: Sequence[int]) -> HostVector:
        """sum_l A_l(x) B_l(y) C_l with rank host multiplications A_l(x) * B_l(y)"""
        z = [0] * self.n
        for a, b, c in zip(self.a_forms, self.b_forms, self.c_vecs):
            product = self.host.mul(self._dot(a, x), self._dot(b, y))
            if product:
                for j, cj in enumerate(c):
                    z[j] ^= self.host.mul(product, cj)
        return tuple(z)

    def reference(self, x: Sequence[int], y: Sequence[int]) -> HostVector:
        """x * y in host[y]/(modulus), computed directly"""
        return roots.mul_mod(self.host, x, y, self.modulus)


def _first_quadratic(host: FieldSpec) -> HostVector:
    """
    First irreducible y^2 + s y + t over the host in (s, t) order.

    With s != 0 it is irreducible iff the trace of t / s^2 is 1; s = 0 never is.
    """
    for s in range(1, host.order):
        s2_inv = host.inverse(host.square(s))
        for t in range(host.order):
            if host.trace(host.mul(t, s2_inv)):
                return (t, s, 1)
    raise ValueError(f"No irreducible quadratic over F_2^{host.extension_degree}")


def karatsuba(host: FieldSpec) -> RelativeAlgorithm:
    """
    Rank-3 algorithm for the quadratic extension of the host.

    With y^2 = s y + t: z0 = m0 + t m1, z1 = m0 + m2 + (1 + s) m1.
    """
    t, s, _ = modulus = _first_quadratic(host)
    return RelativeAlgorithm(
        host=host,
        modulus=modulus,
        a_forms=((1, 0), (0, 1), (1, 1)),
        b_forms=((1, 0), (0, 1), (1, 1)),
        c_vecs=((1, 1), (t, 1 ^ s), (0, 1)),
    )


def truncated2(host: FieldSpec) -> RelativeAlgorithm:
    """Products of a0 + a1 t and b0 + b1 t modulo t^2 with three host multiplications"""
    return RelativeAlgorithm(
        host=host,
        modulus=(0, 0, 1),
        a_forms=((1, 0), (0, 1), (1, 1)),
        b_forms=((1, 0), (0, 1), (1, 1)),
        c_vecs=((1, 1), (0, 1), (0, 1)),
    )


def identity(host: FieldSpec) -> RelativeAlgorithm:
    return RelativeAlgorithm(
        host=host,
        modulus=(0, 1),
        a_forms=((1,),),
        b_forms=((1,),),
        c_vecs=((1,),),
    )


def lift(alg: BilinearAlgorithm, host: FieldSpec) -> RelativeAlgorithm:
    """
    Read an algorithm over F_2 as one over the host.

    Requires gcd(n, m) = 1 so that the F_2 modulus stays irreducible over the host.
    """
    m = host.extension_degree
    if gcd(alg.n, m) != 1:
        raise ValueError(f"Cannot lift a degree-{alg.n} algorithm to F_2^{m}: degrees are not coprime")

    def spread(bits: int) -> HostVector:
        return tuple((bits >> j) & 1 for j in range(alg.n))

    return RelativeAlgorithm(
        host=host,
        modulus=tuple(alg.field.modulus.coefficients()),
        a_forms=tuple(spread(a) for a in alg.a_forms),
        b_forms=tuple(spread(b) for b in alg.b_forms),
        c_vecs=tuple(spread(c) for c in alg.c_vecs),
    )


def host_vectors(host: FieldSpec, n: int) -> List[HostVector]:
    """Every element of host^n, for exhaustive checks of small relative algorithms"""
    vectors: List[HostVector] = [()]
    for _ in range(n):
        vectors = [v + (e,) for v in vectors for e in range(host.order)]
    return vectors
