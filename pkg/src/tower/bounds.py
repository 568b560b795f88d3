"""
Genus and place-count bounds for the descended Garcia-Stichtenoth tower over F_2,
step selection, and the tensor-rank bounds built on them.

All values are exact: integers or Fractions.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Any, Dict, List, Optional, Tuple

from sympy import factorint

from utils.serialization import rational

logger = logging.getLogger(__name__)

P = 2
Q = 4

M2_SIMPLE = Fraction(45, 2)
M2_DERIVATIVE = Fraction(477, 26)
VERTEX_RATIO = Fraction(40, 13)


@dataclass(frozen=True)
class TowerStep:
    """H_{k,s}; (k, 2) is the same field as (k + 1, 0)"""

    k: int
    s: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"Tower index k must be >= 1, got {self.k}")
        if self.s not in (0, 1, 2):
            raise ValueError(f"Tower index s must be 0, 1 or 2, got {self.s}")

    def normalized(self) -> "TowerStep":
        return TowerStep(self.k + 1, 0) if self.s == 2 else self

    @property
    def index(self) -> int:
        """Position in the densified order H_{1,0} < H_{1,1} < H_{2,0} < ..."""
        step = self.normalized()
        return 2 * (step.k - 1) + step.s

    @property
    def name(self) -> str:
        step = self.normalized()
        return f"H{step.k}" if step.s == 0 else f"H{step.k}{step.s}"

    def to_json(self) -> Dict[str, Any]:
        step = self.normalized()
        return {"k": step.k, "s": step.s, "name": step.name, "index": step.index}

    def __str__(self) -> str:
        return f"H_{{{self.k},{self.s}}}"


NAMED_STEPS = {
    "H1": TowerStep(1, 0),
    "H11": TowerStep(1, 1),
    "H2": TowerStep(2, 0),
    "H21": TowerStep(2, 1),
}

# Genus and place counts (N1, N2, N4) reported for the first four steps
TABLE_GENUS = {(1, 0): 0, (1, 1): 2, (2, 0): 6, (2, 1): 23}
TABLE_COUNTS = {
    (1, 0): (3, 1, 3),
    (1, 1): (3, 1, 7),
    (2, 0): (3, 1, 15),
    (2, 1): (4, 1, 28),
}


def place_sum(counts: Tuple[int, int, int]) -> int:
    n1, n2, n4 = counts
    return n1 + 2 * n2 + 4 * n4


def genus_exact(k: int) -> int:
    """g_k of H_k over F_2 (q = 4), closed form by parity of k"""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k % 2:
        value = Q ** k + Q ** (k - 1) - Q ** ((k + 1) // 2) - 2 * Q ** ((k - 1) // 2) + 1
    else:
        half = k // 2
        value = (Q ** k + Q ** (k - 1) - Fraction(1, 2) * Q ** (half + 1)
                 - Fraction(3, 2) * Q ** half - Q ** (half - 1) + 1)
    return int(value)


def genus_upper_iii(step: TowerStep) -> int:
    """q^(k-1) (q+1) p^s"""
    return Q ** (step.k - 1) * (Q + 1) * P ** step.s


def genus_upper(step: TowerStep) -> int:
    """
    Smallest applicable upper bound on g_{k,s}.

    iii) q^(k-1) (q+1) p^s for every k;
    iv) (q^k (q+1) - q^(k/2) (q-1)) / p^(2-s) for k >= 2.
    """
    bounds = [genus_upper_iii(step)]
    if step.k >= 2:
        # q^(k/2) = 2^k
        numerator = Q ** step.k * (Q + 1) - 2 ** step.k * (Q - 1)
        bounds.append(floor(Fraction(numerator, P ** (2 - step.s))))
    return min(bounds)


def genus_upper_ii(k: int) -> int:
    """q^(k-1) (q+1) - sqrt(q) q^(k/2), an upper bound on g_k"""
    return Q ** (k - 1) * (Q + 1) - 2 * 2 ** k


def delta_lower(step: TowerStep) -> int:
    """D_{k,s} = p^(s+1) q^(k-1) <= g_{k,s+1} - g_{k,s}"""
    if step.s not in (0, 1):
        raise ValueError("The genus increment is defined for s in {0, 1}")
    return P ** (step.s + 1) * Q ** (step.k - 1)


def place_sum_lower(step: TowerStep) -> int:
    """N1 + 2 N2 + 4 N4 >= (q^2 - 1) q^(k-1) p^s"""
    return (Q * Q - 1) * Q ** (step.k - 1) * P ** step.s


def n0_lower(k: int) -> int:
    """ceil(5/2 q^(k-1) - 7/2)"""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return ceil(Fraction(5, 2) * Q ** (k - 1) - Fraction(7, 2))


def n0_from_counts(place_total: int, genus: int) -> int:
    """Largest n with 2n <= place_total - 2 genus - 7"""
    return floor(Fraction(place_total - 2 * genus - 7, 2))


def n0_certified(step: TowerStep) -> int:
    return n0_from_counts(place_sum_lower(step), genus_upper(step))


@dataclass(frozen=True)
class GenusInfo:
    exact: Optional[int]
    lower: int
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"Empty genus interval [{self.lower}, {self.upper}]")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError(f"Genus {self.exact} outside [{self.lower}, {self.upper}]")

    @property
    def certified(self) -> int:
        """Value safe to use in inequalities monotone in the genus"""
        return self.exact if self.exact is not None else self.upper


def genus_info(step: TowerStep) -> GenusInfo:
    step = step.normalized()
    if step.s == 0:
        g = genus_exact(step.k)
        return GenusInfo(exact=g, lower=g, upper=min(genus_upper(step), genus_upper_ii(step.k)))
    below = genus_exact(step.k)
    # degree-2 extension (Hurwitz) and the increment bound
    lower = max(0, 2 * (below - 1) + 1, below + delta_lower(TowerStep(step.k, 0)))
    return GenusInfo(
        exact=TABLE_GENUS.get((step.k, step.s)),
        lower=lower,
        upper=genus_upper(step),
    )


def _table_step(n: int) -> Optional[TowerStep]:
    if n <= 5:
        return NAMED_STEPS["H1"]
    if n <= 11:
        return NAMED_STEPS["H11"]
    if n <= 23:
        return NAMED_STEPS["H2"]
    if n <= 27:
        return NAMED_STEPS["H21"]
    return None


def certifies_condition2(step: TowerStep, n: int) -> bool:
    """place_sum_lower >= 2n + 2 genus_upper + 7"""
    return n <= n0_certified(step)


def k_interval(n: int) -> Tuple[int, int]:
    """
    Integers k with 1/2 log2(4/5 (2n + 6)) <= k <= (n - 12) / 4,
    i.e. 5 * 4^k >= 4 (2n + 6) and 4k <= n - 12.
    """
    k_min = 1
    while 5 * Q ** k_min < 4 * (2 * n + 6):
        k_min += 1
    return k_min, (n - 12) // 4


def select_step(n: int) -> TowerStep:
    """
    Tower step guaranteed to carry a place of degree n and satisfy
    N1 + 2 N2 + 4 N4 >= 2n + 2 g + 7.
    """
    if n < 2:
        raise ValueError(f"Step selection needs n >= 2, got {n}")
    table = _table_step(n)
    if table is not None:
        return table
    k_min, k_max = k_interval(n)
    for k in range(k_min, k_max + 1):
        for s in (0, 1):
            step = TowerStep(k, s)
            if certifies_condition2(step, n):
                logger.debug("select_step(%d) -> %s", n, step)
                return step
    raise ValueError(f"No certified tower step for n={n}")


def degree_n_place_certified(genus: int, n: int) -> bool:
    """
    2g + 1 <= 2^((n-1)/2) (sqrt(2) - 1), decided with integers only.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lhs = 2 * genus + 1
    if n % 2:
        a = 2 ** ((n - 1) // 2)
        # lhs + a <= a sqrt(2)
        return (lhs + a) ** 2 <= 2 * a * a
    b = 2 ** (n // 2)
    # lhs <= b - b / sqrt(2)
    rest = b - lhs
    return rest >= 0 and b * b <= 2 * rest * rest


def bound_generic(n: int, genus: int, l4: int) -> Fraction:
    """9/2 (n + g + 5) + 9 l4"""
    if n < 1 or genus < 0 or l4 < 0:
        raise ValueError("bound_generic needs n >= 1, g >= 0 and l4 >= 0")
    return Fraction(9, 2) * (n + genus + 5) + 9 * l4


def bound_simple(n: int) -> Fraction:
    """45/2 n + 171/2"""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return M2_SIMPLE * n + Fraction(171, 2)


def bound_derivative(n: int) -> Fraction:
    """477/26 n + 45/2"""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return M2_DERIVATIVE * n + Fraction(45, 2)


def step_bound(n: int) -> Fraction:
    """bound_generic at select_step(n), with the certified genus and no degree-4 derivatives"""
    return bound_generic(n, genus_info(select_step(n)).certified, 0)


def phi(
    x,
    step: TowerStep,
    n0: int,
    g_ks: int,
    dg: int,
    D: Optional[int] = None,
) -> Fraction:
    """
    Piecewise linear bound between consecutive steps.

    x - n0 + 2 < D: 9 (x - n0) + 9/2 (n0 + g + 5) + 9
    otherwise:      9/2 (x - n0) + 9/2 (n0 + g + 5 + dg)
    """
    x = Fraction(x)
    D = delta_lower(step) if D is None else D
    if x - n0 + 2 < D:
        return 9 * (x - n0) + Fraction(9, 2) * (n0 + g_ks + 5) + 9
    return Fraction(9, 2) * (x - n0) + Fraction(9, 2) * (n0 + g_ks + 5 + dg)


def vertex_ratio_bound(step: TowerStep) -> Fraction:
    """
    Upper bound on g_{k,s+1} / X at the vertex X = n0 + D - 2, from bound iii) and n0_lower.
    """
    if step.s not in (0, 1):
        raise ValueError("Vertices are defined for s in {0, 1}")
    x = n0_lower(step.k) + delta_lower(step) - 2
    if x <= 0:
        raise ValueError(f"Vertex of {step} is not positive")
    return Fraction(genus_upper_iii(TowerStep(step.k, step.s + 1)), x)


@dataclass(frozen=True)
class Vertex:
    step: TowerStep
    n0: int
    x: int
    value: Fraction


def table_vertices() -> List[Vertex]:
    """Vertices (X, phi(X)) of the four tabulated steps, from the tabulated counts"""
    genus_next = {(1, 0): 2, (1, 1): 6, (2, 0): 23, (2, 1): genus_exact(3)}
    vertices = []
    for (k, s), counts in TABLE_COUNTS.items():
        step = TowerStep(k, s)
        g = TABLE_GENUS[(k, s)]
        n0 = n0_from_counts(place_sum(counts), g)
        D = delta_lower(step)
        dg = genus_next[(k, s)] - g
        x = n0 + D - 2
        vertices.append(Vertex(step, n0, x, phi(x, step, n0, g, dg, D)))
    return vertices


def quadratic_tower_ratio(q: int, p: int) -> Fraction:
    """mu_{q^2}(n) / n <= 2 (1 + p / (q - 3 + (p - 1)(1 - 1/(q + 1))))"""
    return 2 * (1 + Fraction(p) / (q - 3 + (p - 1) * (1 - Fraction(1, q + 1))))


def base_tower_ratio(q: int, p: int) -> Fraction:
    """mu_q(n) / n <= 3 (1 + 2p / (q - 3 + 2(p - 1)(1 - 1/(q + 1))))"""
    return 3 * (1 + Fraction(2 * p) / (q - 3 + 2 * (p - 1) * (1 - Fraction(1, q + 1))))


def linear_rank_constant(q: int) -> Fraction:
    """C_q with mu_q(n) <= C_q n"""
    factors = factorint(q)
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, r), = factors.items()
    root = isqrt(q) if r % 2 == 0 else None
    if q == 2:
        return Fraction(54)
    if q == 3:
        return Fraction(27)
    if r == 1 and q >= 5:
        return 3 * (1 + Fraction(4, q - 3))
    if r == 2 and q >= 25:
        return 2 * (1 + Fraction(2, root - 3))
    if root is not None and q >= 16:
        return 2 * (1 + Fraction(p, root - 3))
    if q >= 16:
        return 3 * (1 + Fraction(2 * p, q - 3))
    return 6 * (1 + Fraction(p, q - 3))


def legacy_bounds() -> Dict[str, Any]:
    """
    Earlier asymptotic constants for F_2: composing mu_2(2) = 3 with bound ii) over F_4,
    and mu_2(4) <= 9 with bound i) over F_16.
    """
    return {
        "M2_composed": 3 * base_tower_ratio(4, 2),
        "M2_remark": 9 * quadratic_tower_ratio(4, 2),
        "C_2": linear_rank_constant(2),
        "C_3": linear_rank_constant(3),
        "C_q": linear_rank_constant,
    }


@dataclass(frozen=True)
class BoundReport:
    n: int
    selected_step: TowerStep
    step_genus: GenusInfo
    step_bound: Fraction
    simple_bound: Fraction
    derivative_bound: Fraction
    legacy: Dict[str, Fraction]
    asymptotic: Dict[str, Fraction]

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "selected_step": self.selected_step.to_json(),
            "step_genus": {
                "exact": self.step_genus.exact,
                "lower": self.step_genus.lower,
                "upper": self.step_genus.upper,
            },
            "step_bound": rational(self.step_bound),
            "simple_bound": rational(self.simple_bound),
            "derivative_bound": rational(self.derivative_bound),
            "legacy_bounds": {k: rational(v) for k, v in self.legacy.items()},
            "asymptotic_constants": {k: rational(v) for k, v in self.asymptotic.items()},
        }


def bound_report(n: int) -> BoundReport:
    legacy = legacy_bounds()
    step = select_step(n)
    return BoundReport(
        n=n,
        selected_step=step,
        step_genus=genus_info(step),
        step_bound=step_bound(n),
        simple_bound=bound_simple(n),
        derivative_bound=bound_derivative(n),
        legacy={
            "arnaud_composed": legacy["M2_composed"] * n,
            "arnaud_remark": legacy["M2_remark"] * n,
        },
        asymptotic={"M2_simple": M2_SIMPLE, "M2_derivative": M2_DERIVATIVE},
    )
