"""
Binary polynomial arithmetic and the finite fields F_{2^d} it generates.
Polynomials are immutable wrappers around an int bit mask (bit i = coefficient of x^i).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np
from sympy import divisors, factorint, primefactors

# Degree of the zero polynomial
ZERO_DEGREE = -1

# Synthesized fields stay <= 17; composed algorithms go up to the verifier's word size
MAX_FIELD_DEGREE = 32
MAX_ENUMERATION_DEGREE = 8


def _clmul(a: int, b: int) -> int:
    """Carry-less product of two bit masks"""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    result = 0
    while b:
        low = b & -b
        result ^= a << (low.bit_length() - 1)
        b ^= low
    return result


def _cldivmod(a: int, m: int) -> Tuple[int, int]:
    quotient = 0
    m_len = m.bit_length()
    while a.bit_length() >= m_len:
        shift = a.bit_length() - m_len
        quotient |= 1 << shift
        a ^= m << shift
    return quotient, a


@dataclass(frozen=True)
class BinaryPoly:
    """Polynomial over F_2 in normalized form"""

    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError(f"Negative bit mask {self.bits} is not a polynomial")

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[int]) -> "BinaryPoly":
        """Build from coefficients listed from the constant term upward"""
        bits = 0
        for i, c in enumerate(coefficients):
            if c & 1:
                bits |= 1 << i
        return cls(bits)

    @classmethod
    def from_hex(cls, text: str) -> "BinaryPoly":
        return cls(int(text, 16))

    @classmethod
    def monomial(cls, exponent: int) -> "BinaryPoly":
        return cls(1 << exponent)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1 if self.bits else ZERO_DEGREE

    def coefficients(self) -> Tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.degree + 1))

    def coefficient(self, i: int) -> int:
        return (self.bits >> i) & 1 if i >= 0 else 0

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_hex(self) -> str:
        return format(self.bits, 'x')

    def __add__(self, other: "BinaryPoly") -> "BinaryPoly":
        return BinaryPoly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "BinaryPoly") -> "BinaryPoly":
        return poly_mul(self, other)

    def __mod__(self, other: "BinaryPoly") -> "BinaryPoly":
        return poly_divmod(self, other)[1]

    def __floordiv__(self, other: "BinaryPoly") -> "BinaryPoly":
        return poly_divmod(self, other)[0]

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if not self.coefficient(i):
                continue
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return " + ".join(terms)


ZERO = BinaryPoly(0)
ONE = BinaryPoly(1)
X = BinaryPoly(2)


def poly_mul(a: BinaryPoly, b: BinaryPoly) -> BinaryPoly:
    """Product in F_2[x]"""
    return BinaryPoly(_clmul(a.bits, b.bits))


def poly_divmod(a: BinaryPoly, m: BinaryPoly) -> Tuple[BinaryPoly, BinaryPoly]:
    """
    Euclidean division in F_2[x].

    Returns:
        (quotient, remainder) with a = quotient * m + remainder, deg(remainder) < deg(m)
    """
    if m.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial")
    q, r = _cldivmod(a.bits, m.bits)
    return BinaryPoly(q), BinaryPoly(r)


def poly_gcd(a: BinaryPoly, b: BinaryPoly) -> BinaryPoly:
    x, y = a.bits, b.bits
    while y:
        x, y = y, _cldivmod(x, y)[1]
    return BinaryPoly(x)


def poly_powmod(a: BinaryPoly, exponent: int, m: BinaryPoly) -> BinaryPoly:
    if exponent < 0:
        raise ValueError("Negative exponents are not supported")
    if m.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial")
    result = _cldivmod(1, m.bits)[1]
    base = _cldivmod(a.bits, m.bits)[1]
    while exponent:
        if exponent & 1:
            result = _cldivmod(_clmul(result, base), m.bits)[1]
        base = _cldivmod(_clmul(base, base), m.bits)[1]
        exponent >>= 1
    return BinaryPoly(result)


def poly_inverse_mod(a: BinaryPoly, m: BinaryPoly) -> BinaryPoly:
    """Inverse of a modulo m via the extended Euclidean algorithm"""
    if m.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial")
    r0, r1 = m.bits, _cldivmod(a.bits, m.bits)[1]
    s0, s1 = 0, 1
    while r1:
        q, r = _cldivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ _clmul(q, s1)
    if r0 != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return BinaryPoly(_cldivmod(s0, m.bits)[1])


def _frobenius_power_of_x(p: int, k: int) -> int:
    """x^(2^k) mod p by k successive squarings"""
    value = _cldivmod(2, p)[1]
    for _ in range(k):
        value = _cldivmod(_clmul(value, value), p)[1]
    return value


def is_irreducible(p: BinaryPoly) -> bool:
    """
    Rabin's test: x^(2^d) = x mod p and gcd(x^(2^(d/l)) - x, p) = 1 for every prime l | d.
    """
    d = p.degree
    if d < 1:
        raise ValueError(f"Irreducibility is undefined for degree {d}")
    if d == 1:
        return True
    x_mod_p = _cldivmod(2, p.bits)[1]
    if _frobenius_power_of_x(p.bits, d) != x_mod_p:
        return False
    for prime in primefactors(d):
        h = _frobenius_power_of_x(p.bits, d // prime) ^ x_mod_p
        if poly_gcd(BinaryPoly(h), p) != ONE:
            return False
    return True


def mobius(n: int) -> int:
    exponents = factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def necklace_count(d: int) -> int:
    """Number of monic irreducibles of degree d over F_2"""
    if d < 1:
        raise ValueError(f"Degree must be positive, got {d}")
    return sum(mobius(e) * 2 ** (d // e) for e in divisors(d)) // d


@lru_cache(maxsize=None)
def irreducibles_of_degree(d: int) -> Tuple[BinaryPoly, ...]:
    """All monic irreducibles of degree d, sorted by hex value"""
    if not 1 <= d <= MAX_ENUMERATION_DEGREE:
        raise ValueError(f"Irreducible enumeration supports 1 <= d <= {MAX_ENUMERATION_DEGREE}, got {d}")
    found = []
    for bits in range(1 << d, 1 << (d + 1)):
        candidate = BinaryPoly(bits)
        if is_irreducible(candidate):
            found.append(candidate)
    return tuple(found)


@lru_cache(maxsize=None)
def canonical_modulus(d: int) -> BinaryPoly:
    """
    Irreducible of degree d whose coefficient tuple (c0, c1, ..., cd) is lexicographically smallest.
    """
    if not 1 <= d <= MAX_FIELD_DEGREE:
        raise ValueError(f"Field degree must satisfy 1 <= d <= {MAX_FIELD_DEGREE}, got {d}")
    # c0 is the most significant bit of r; for d > 1 it must be 1 or x divides the candidate
    start = 0 if d == 1 else 1 << (d - 1)
    for r in range(start, 1 << d):
        low = int(format(r, f'0{d}b')[::-1], 2)
        candidate = BinaryPoly((1 << d) | low)
        if d > 1 and bin(candidate.bits).count("1") % 2 == 0:
            continue  # x + 1 divides it
        if is_irreducible(candidate):
            return candidate
    raise ArithmeticError(f"No irreducible polynomial of degree {d}")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """F_2[x]/(modulus) with modulus irreducible of degree extension_degree"""

    extension_degree: int
    modulus: BinaryPoly

    def __post_init__(self):
        if self.modulus.degree != self.extension_degree:
            raise ValueError(
                f"Modulus {self.modulus} has degree {self.modulus.degree}, expected {self.extension_degree}"
            )
        if not is_irreducible(self.modulus):
            raise ValueError(f"Modulus {self.modulus} is reducible over F_2")

    @classmethod
    def canonical(cls, d: int) -> "FieldSpec":
        return _canonical_spec(d)

    @property
    def order(self) -> int:
        return 1 << self.extension_degree

    @property
    def is_canonical(self) -> bool:
        return self.extension_degree <= MAX_FIELD_DEGREE and self.modulus == canonical_modulus(self.extension_degree)

    # Int-level arithmetic: elements are bit masks of degree < extension_degree

    def reduce(self, value: int) -> int:
        return _cldivmod(value, self.modulus.bits)[1]

    def mul(self, a: int, b: int) -> int:
        return self.reduce(_clmul(a, b))

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def mulx(self, a: int) -> int:
        return self.reduce(a << 1)

    def power(self, a: int, exponent: int) -> int:
        if exponent < 0:
            return self.power(self.inverse(a), -exponent)
        result = self.reduce(1)
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            exponent >>= 1
        return result

    def inverse(self, a: int) -> int:
        a = self.reduce(a)
        if a == 0:
            raise ZeroDivisionError("Zero has no inverse")
        # a^(2^d - 2)
        return self.power(a, self.order - 2) if self.order > 2 else a

    def trace(self, a: int) -> int:
        """Absolute trace to F_2"""
        total, term = 0, self.reduce(a)
        for _ in range(self.extension_degree):
            total ^= term
            term = self.square(term)
        return total

    def element(self, value) -> "FieldElement":
        if isinstance(value, BinaryPoly):
            value = value.bits
        return FieldElement(self, BinaryPoly(self.reduce(value)))

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(self, BinaryPoly(v)) for v in range(self.order)]


@lru_cache(maxsize=None)
def _canonical_spec(d: int) -> FieldSpec:
    return FieldSpec(d, canonical_modulus(d))


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: BinaryPoly

    def __post_init__(self):
        if self.value.degree >= self.spec.extension_degree:
            raise ValueError(
                f"Value {self.value} has degree >= {self.spec.extension_degree}"
            )

    def _check(self, other: "FieldElement") -> None:
        if other.spec != self.spec:
            raise ValueError("Field elements belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec, self.value + other.value)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return field_mul(self, other)

    def __pow__(self, exponent: int) -> "FieldElement":
        return FieldElement(self.spec, BinaryPoly(self.spec.power(self.value.bits, exponent)))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, BinaryPoly(self.spec.inverse(self.value.bits)))

    def to_hex(self) -> str:
        return self.value.to_hex()

    def __int__(self) -> int:
        return self.value.bits


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """(a.value * b.value) mod modulus"""
    if a.spec != b.spec:
        raise ValueError("Cannot multiply elements of different fields")
    return FieldElement(a.spec, BinaryPoly(a.spec.mul(a.value.bits, b.value.bits)))


def field_mul_array(spec: FieldSpec, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """
    Vectorized reference multiplication of encoded elements (broadcasting like numpy).

    Args:
        spec: field to multiply in
        xs, ys: integer arrays of element encodings

    Returns:
        int64 array of products
    """
    d = spec.extension_degree
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    acc = np.zeros(np.broadcast(xs, ys).shape, dtype=np.int64)
    for i in range(d):
        acc ^= ((xs >> i) & 1) * (ys << i)
    modulus = np.int64(spec.modulus.bits)
    for k in range(2 * d - 2, d - 1, -1):
        acc ^= ((acc >> k) & 1) * (modulus << (k - d))
    return acc
