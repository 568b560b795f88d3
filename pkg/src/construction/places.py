"""
Places of the rational function field F_2(x) and evaluation plans over them
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from algebra.gf2k import BinaryPoly, irreducibles_of_degree, is_irreducible
from bilinear.algorithm import RANK_BUDGET

logger = logging.getLogger(__name__)

PLACE_DEGREES = (1, 2, 4)
MAX_PLAN_N = 17


@dataclass(frozen=True)
class Place:
    """A finite place given by a monic irreducible, or the place at infinity (modulus None)"""

    modulus: Optional[BinaryPoly] = None

    def __post_init__(self):
        if self.modulus is None:
            return
        if self.modulus.degree not in PLACE_DEGREES:
            raise ValueError(f"Places must have degree in {PLACE_DEGREES}, got {self.modulus.degree}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"{self.modulus} is not irreducible")

    @property
    def is_infinity(self) -> bool:
        return self.modulus is None

    @property
    def degree(self) -> int:
        return 1 if self.modulus is None else self.modulus.degree

    @property
    def label(self) -> str:
        return "inf" if self.modulus is None else self.modulus.to_hex()

    def __str__(self) -> str:
        return "∞" if self.modulus is None else str(self.modulus)


INFINITY = Place()


@lru_cache(maxsize=None)
def inventory() -> Tuple[Place, ...]:
    """x, x+1, infinity, x^2+x+1, then the degree-4 places by hex value"""
    linear = [Place(p) for p in irreducibles_of_degree(1)]
    return (
        *linear,
        INFINITY,
        *(Place(p) for p in irreducibles_of_degree(2)),
        *(Place(p) for p in irreducibles_of_degree(4)),
    )


@dataclass(frozen=True)
class Assignment:
    place: Place
    u: int

    def __post_init__(self):
        if self.u not in (1, 2):
            raise ValueError(f"Multiplicity must be 1 or 2, got {self.u}")

    @property
    def capacity(self) -> int:
        return self.u * self.place.degree

    @property
    def cost(self) -> int:
        return RANK_BUDGET.local_cost(self.place.degree, self.u)


@dataclass(frozen=True)
class EvaluationPlan:
    n: int
    assignments: Tuple[Assignment, ...]

    def __post_init__(self):
        places = [a.place for a in self.assignments]
        if len(set(places)) != len(places):
            raise ValueError("A place appears more than once in the plan")
        if self.capacity < 2 * self.n - 1:
            raise ValueError(
                f"Capacity {self.capacity} cannot separate products of degree <= {2 * self.n - 2}"
            )

    @property
    def capacity(self) -> int:
        return sum(a.capacity for a in self.assignments)

    @property
    def cost(self) -> int:
        return sum(a.cost for a in self.assignments)

    @property
    def counts(self) -> Dict[str, int]:
        """N_d places of degree d in the plan, l_d of them with u = 2"""
        counts = {}
        for d in PLACE_DEGREES:
            counts[f"N{d}"] = sum(1 for a in self.assignments if a.place.degree == d)
            counts[f"l{d}"] = sum(1 for a in self.assignments if a.place.degree == d and a.u == 2)
        return counts

    @property
    def rank_formula(self) -> int:
        """N1 + 2 l1 + 3 N2 + 6 l2 + 9 (N4 + 2 l4)"""
        c = self.counts
        return c["N1"] + 2 * c["l1"] + 3 * c["N2"] + 6 * c["l2"] + 9 * (c["N4"] + 2 * c["l4"])

    @property
    def infinity(self) -> Optional[Assignment]:
        for a in self.assignments:
            if a.place.is_infinity:
                return a
        return None

    @property
    def finite(self) -> List[Assignment]:
        return [a for a in self.assignments if not a.place.is_infinity]

    def describe(self) -> str:
        parts = [f"{a.place}:{a.u}" for a in self.assignments]
        return "{" + ", ".join(parts) + "}"


def plan_to_json(plan: EvaluationPlan) -> Dict[str, Any]:
    return {
        "n": plan.n,
        "assignments": [
            {"place": a.place.label, "degree": a.place.degree, "u": a.u}
            for a in plan.assignments
        ],
        "rank": plan.cost,
        "counts": plan.counts,
    }


def _plan_key(us: Tuple[int, ...], places: Tuple[Place, ...]) -> Tuple:
    cost = sum(RANK_BUDGET.local_cost(p.degree, u) for p, u in zip(places, us) if u)
    cap = {d: sum(u * p.degree for p, u in zip(places, us) if p.degree == d) for d in PLACE_DEGREES}
    total = sum(cap.values())
    # derivatives on earlier places first
    derivative_order = tuple(-u for u in us)
    return cost, cap[4], cap[2], total, derivative_order


def plan_places(n: int) -> EvaluationPlan:
    """
    Cheapest plan with capacity >= 2n - 1, by exhaustive search over multiplicities 0, 1, 2.

    Ties prefer less degree-4 capacity, then less degree-2 capacity, then less total
    capacity, then derivative evaluations on earlier places of the inventory.
    """
    if not 1 <= n <= MAX_PLAN_N:
        raise ValueError(f"Genus-zero plans exist for 1 <= n <= {MAX_PLAN_N}, got {n}; use composition")
    places = inventory()
    need = 2 * n - 1
    best_key, best_us = None, None
    for us in itertools.product((0, 1, 2), repeat=len(places)):
        capacity = sum(u * p.degree for p, u in zip(places, us))
        if capacity < need:
            continue
        key = _plan_key(us, places)
        if best_key is None or key < best_key:
            best_key, best_us = key, us
    plan = EvaluationPlan(n, tuple(Assignment(p, u) for p, u in zip(places, best_us) if u))
    logger.info("Plan for n=%d: %s, rank %d", n, plan.describe(), plan.cost)
    return plan
