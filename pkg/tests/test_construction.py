import random
import unittest

from algebra.gf2k import BinaryPoly, FieldSpec
from bilinear.formulas import truncated2
from bilinear.verify import verify
from construction.evaluation import (
    InconsistentResiduesError, crt, ev_P, evaluate_plan, local_expansion, reconstruct,
    residue_isomorphism, teichmuller, transport_digits,
)
from construction.places import (
    INFINITY, Assignment, EvaluationPlan, Place, inventory, plan_places, plan_to_json,
)
from construction.synthesis import local_algorithm, synthesize, synthesize_from_plan

X = Place(BinaryPoly(0b10))
X1 = Place(BinaryPoly(0b11))
P7 = Place(BinaryPoly(0b111))


class TestPlaces(unittest.TestCase):

    def test_inventory(self):
        self.assertEqual([p.label for p in inventory()], ["2", "3", "inf", "7", "13", "19", "1f"])
        self.assertEqual([p.degree for p in inventory()], [1, 1, 1, 2, 4, 4, 4])
        self.assertEqual(str(INFINITY), "∞")

    def test_invalid_places(self):
        with self.assertRaises(ValueError):
            Place(BinaryPoly(0b101))  # (x + 1)^2
        with self.assertRaises(ValueError):
            Place(BinaryPoly(0b1011))  # degree 3
        with self.assertRaises(ValueError):
            Assignment(X, 3)

    def test_plan_validation(self):
        with self.assertRaises(ValueError):
            EvaluationPlan(2, (Assignment(X, 1), Assignment(X, 1), Assignment(INFINITY, 1)))
        with self.assertRaises(ValueError):
            EvaluationPlan(3, (Assignment(X, 1), Assignment(X1, 1), Assignment(INFINITY, 1)))

    def test_small_plans(self):
        self.assertEqual(plan_places(1).cost, 1)
        self.assertEqual(plan_places(2).cost, 3)
        self.assertEqual(plan_places(3).cost, 6)
        plan = plan_places(4)
        self.assertEqual(plan.cost, 10)
        self.assertEqual({a.place.label: a.u for a in plan.assignments}, {"2": 2, "3": 2, "inf": 1, "7": 1})

    def test_plans_are_minimal_and_sufficient(self):
        previous = 0
        for n in range(1, 18):
            plan = plan_places(n)
            self.assertGreaterEqual(plan.capacity, 2 * n - 1)
            self.assertEqual(plan.cost, plan.rank_formula)
            self.assertGreaterEqual(plan.cost, previous)
            previous = plan.cost

    def test_no_assignment_is_spare(self):
        for n in range(1, 7):
            plan = plan_places(n)
            for a in plan.assignments:
                self.assertLess(plan.capacity - a.capacity, 2 * n - 1, (n, a.place.label))

    def test_plan_range(self):
        for n in (0, 18):
            with self.assertRaises(ValueError):
                plan_places(n)

    def test_plan_json(self):
        data = plan_to_json(plan_places(2))
        self.assertEqual(data["rank"], 3)
        self.assertEqual([a["place"] for a in data["assignments"]], ["2", "3", "inf"])
        self.assertEqual(data["counts"]["N1"], 3)


class TestLocalExpansion(unittest.TestCase):

    def test_examples(self):
        x = BinaryPoly(0b10)
        self.assertEqual(ev_P(x, X, 2), (0, 1))
        self.assertEqual(ev_P(BinaryPoly(0b11), X, 2), (1, 1))
        self.assertEqual(ev_P(x, P7, 2), (0b10, 1))
        self.assertEqual(ev_P(BinaryPoly(0b101), INFINITY, 2, degree_bound=2), (1, 0))
        self.assertEqual(ev_P(x, INFINITY, 1, degree_bound=2), (0,))

    def test_errors(self):
        with self.assertRaises(ValueError):
            local_expansion(BinaryPoly(1), X, 3)
        with self.assertRaises(ValueError):
            local_expansion(BinaryPoly(1), INFINITY, 1)
        with self.assertRaises(ValueError):
            local_expansion(BinaryPoly(0b1000), INFINITY, 1, degree_bound=2)

    def test_teichmuller_is_multiplicative(self):
        rng = random.Random(11)
        for modulus in (0b10, 0b111, 0b10011, 0b11111):
            p = BinaryPoly(modulus)
            square = p * p
            for _ in range(100):
                r, s = BinaryPoly(rng.getrandbits(8)), BinaryPoly(rng.getrandbits(8))
                self.assertEqual(teichmuller(r * s, p), teichmuller(r, p) * teichmuller(s, p) % square)
                self.assertEqual(teichmuller(r, p) % p, r % p)

    def test_product_rule(self):
        rng = random.Random(12)
        for place in (X, X1, P7, Place(BinaryPoly(0x13)), Place(BinaryPoly(0x1f))):
            for _ in range(100):
                f, g = BinaryPoly(rng.getrandbits(20)), BinaryPoly(rng.getrandbits(20))
                fe, ge = (tuple(transport_digits(place, local_expansion(h, place, 2))) for h in (f, g))
                product = tuple(transport_digits(place, local_expansion(f * g, place, 2)))
                self.assertEqual(truncated2(place.degree).evaluate(fe, ge), product)

    def test_residue_isomorphism(self):
        place = Place(BinaryPoly(0x13))
        forward, backward = residue_isomorphism(place)
        field, canonical = FieldSpec(4, place.modulus), FieldSpec.canonical(4)
        for a in range(16):
            for b in range(16):
                self.assertEqual(forward.apply(field.mul(a, b)), canonical.mul(forward.apply(a), forward.apply(b)))
            self.assertEqual(backward.apply(forward.apply(a)), a)
        self.assertEqual(transport_digits(place, [1, 0]), [1, 0])


class TestReconstruct(unittest.TestCase):

    def test_top_from_infinity(self):
        self.assertEqual(reconstruct(plan_places(2), ((0,), (0,), (1,))), BinaryPoly(0b110))

    def test_round_trip(self):
        rng = random.Random(13)
        for n in (2, 4, 7, 12, 17):
            plan = plan_places(n)
            for _ in range(50):
                h = BinaryPoly(rng.getrandbits(2 * n - 1))
                self.assertEqual(reconstruct(plan, evaluate_plan(plan, h)), h)

    def test_inconsistent_residues(self):
        plan = EvaluationPlan(2, (Assignment(X, 2), Assignment(X1, 1), Assignment(INFINITY, 1)))
        residues = ((0, 0), (1,), (0,))
        with self.assertRaises(InconsistentResiduesError):
            reconstruct(plan, residues)
        self.assertLessEqual(reconstruct(plan, residues, strict=False).degree, 1)

    def test_wrong_shape(self):
        plan = plan_places(2)
        with self.assertRaises(ValueError):
            reconstruct(plan, ((0,), (0,)))
        with self.assertRaises(ValueError):
            reconstruct(plan, ((0, 0), (0,), (0,)))

    def test_crt(self):
        h, total = crt([BinaryPoly(0), BinaryPoly(1)], [BinaryPoly(0b10), BinaryPoly(0b11)])
        self.assertEqual(h, BinaryPoly(0b10))
        self.assertEqual(total, BinaryPoly(0b110))


class TestSynthesis(unittest.TestCase):

    def test_local_algorithm_sizes(self):
        self.assertEqual(len(local_algorithm(1, 2)[0]), 3)
        self.assertEqual(len(local_algorithm(2, 2)[0]), 9)
        self.assertEqual(len(local_algorithm(4, 1)[0]), 9)

    def test_optimal_small_case(self):
        alg = synthesize(2)
        self.assertEqual(alg.rank, 3)
        self.assertTrue(verify(alg))

    def test_exhaustive_sweep(self):
        for n in range(1, 11):
            alg = synthesize(n)
            self.assertEqual(alg.rank, plan_places(n).cost)
            self.assertTrue(verify(alg, 'exhaustive'), n)

    def test_random_sweep(self):
        for n in range(11, 18):
            alg = synthesize(n)
            self.assertEqual(alg.rank, plan_places(n).rank_formula)
            self.assertTrue(verify(alg, 'random', count=5000), n)

    def test_hand_built_plan(self):
        plan = EvaluationPlan(3, (Assignment(X, 2), Assignment(X1, 2), Assignment(INFINITY, 1)))
        alg = synthesize_from_plan(plan)
        self.assertEqual(alg.rank, 7)
        self.assertTrue(verify(alg))

    def test_composite(self):
        alg = synthesize(18)
        self.assertEqual(alg.n, 18)
        self.assertEqual(alg.rank, synthesize(9).rank * 3)
        self.assertTrue(verify(alg, 'random', count=3000))

    def test_composite_thirty(self):
        alg = synthesize(30)
        self.assertEqual(alg.n, 30)
        self.assertTrue(alg.field.is_canonical)
        self.assertEqual(alg.rank, synthesize(15).rank * 3)
        self.assertTrue(verify(alg, 'random', count=2000))

    def test_unsupported_degrees(self):
        for n in (0, 19, 25, 27, 32, 33):
            with self.assertRaises(ValueError):
                synthesize(n)


if __name__ == '__main__':
    unittest.main()
