import unittest
from fractions import Fraction

from tower.bounds import (
    VERTEX_RATIO, TowerStep, bound_derivative, bound_generic, bound_report, bound_simple,
    certifies_condition2, degree_n_place_certified, delta_lower, genus_exact, genus_info,
    genus_upper, k_interval, legacy_bounds, linear_rank_constant, n0_certified, n0_lower, phi,
    place_sum_lower, select_step, step_bound, table_vertices, vertex_ratio_bound,
)


class TestTowerStep(unittest.TestCase):

    def test_normalization(self):
        self.assertEqual(TowerStep(1, 2).normalized(), TowerStep(2, 0))
        self.assertEqual(TowerStep(1, 2).name, "H2")
        self.assertEqual([TowerStep(k, s).index for k, s in ((1, 0), (1, 1), (2, 0), (2, 1))], [0, 1, 2, 3])

    def test_invalid(self):
        with self.assertRaises(ValueError):
            TowerStep(0, 0)
        with self.assertRaises(ValueError):
            TowerStep(1, 3)


class TestGenus(unittest.TestCase):

    def test_exact(self):
        self.assertEqual([genus_exact(k) for k in (1, 2, 3)], [0, 6, 57])

    def test_upper(self):
        self.assertEqual(genus_upper(TowerStep(1, 1)), 10)
        self.assertEqual(genus_upper(TowerStep(2, 0)), 17)
        self.assertEqual(genus_upper(TowerStep(2, 1)), 34)

    def test_exceeds_tower_growth(self):
        for k in range(4, 11):
            self.assertGreater(genus_exact(k), 4 ** k)

    def test_info_brackets_exact_genus(self):
        for k in range(1, 11):
            info = genus_info(TowerStep(k, 0))
            self.assertTrue(info.lower <= genus_exact(k) <= info.upper, k)
        for k in (1, 2):
            info = genus_info(TowerStep(k, 1))
            self.assertTrue(info.lower <= info.exact <= info.upper, k)

    def test_info(self):
        info = genus_info(TowerStep(2, 1))
        self.assertEqual((info.exact, info.lower, info.upper), (23, 14, 34))
        unknown = genus_info(TowerStep(3, 1))
        self.assertIsNone(unknown.exact)
        self.assertEqual(unknown.certified, 148)
        self.assertEqual(genus_info(TowerStep(1, 2)).exact, 6)


class TestPlaceBounds(unittest.TestCase):

    def test_delta(self):
        self.assertEqual(delta_lower(TowerStep(1, 0)), 2)
        self.assertEqual(delta_lower(TowerStep(2, 0)), 8)
        self.assertEqual(delta_lower(TowerStep(3, 1)), 64)

    def test_place_sum(self):
        self.assertEqual(place_sum_lower(TowerStep(1, 0)), 15)
        self.assertEqual(place_sum_lower(TowerStep(1, 1)), 30)
        self.assertEqual(place_sum_lower(TowerStep(2, 1)), 120)

    def test_n0(self):
        self.assertEqual([n0_lower(k) for k in (1, 2, 3)], [-1, 7, 37])

    def test_degree_n_place(self):
        cases = {(0, 1): False, (0, 3): False, (0, 4): True, (6, 10): False, (6, 12): True}
        for (genus, n), expected in cases.items():
            self.assertEqual(degree_n_place_certified(genus, n), expected, (genus, n))


class TestStepSelection(unittest.TestCase):

    def test_table_ranges(self):
        ranges = [((2, 5), (1, 0)), ((6, 11), (1, 1)), ((12, 23), (2, 0)), ((24, 27), (2, 1))]
        for (lo, hi), (k, s) in ranges:
            for n in range(lo, hi + 1):
                self.assertEqual(select_step(n), TowerStep(k, s), n)

    def test_first_certified(self):
        self.assertEqual(select_step(28), TowerStep(3, 0))
        self.assertEqual(k_interval(28), (3, 4))

    def test_certified_range(self):
        for n in range(28, 1001):
            step = select_step(n)
            k_min, k_max = k_interval(n)
            self.assertTrue(certifies_condition2(step, n))
            self.assertTrue(k_min <= step.k <= k_max)

    def test_steps_never_go_back(self):
        previous = select_step(2).index
        for n in range(3, 1001):
            index = select_step(n).index
            self.assertGreaterEqual(index, previous, n)
            previous = index

    def test_condition_matches_n0(self):
        self.assertEqual(n0_certified(TowerStep(3, 0)), 42)
        for step in (TowerStep(3, 0), TowerStep(3, 1), TowerStep(4, 0)):
            n0 = n0_certified(step)
            self.assertTrue(certifies_condition2(step, n0))
            self.assertFalse(certifies_condition2(step, n0 + 1))

    def test_too_small(self):
        with self.assertRaises(ValueError):
            select_step(1)


class TestRankBounds(unittest.TestCase):

    def test_generic(self):
        self.assertEqual(bound_generic(2, 0, 0), Fraction(63, 2))
        self.assertEqual(bound_generic(10, 6, 1), Fraction(207, 2))
        with self.assertRaises(ValueError):
            bound_generic(2, -1, 0)

    def test_step_bound(self):
        self.assertEqual(step_bound(2), Fraction(63, 2))
        self.assertEqual(step_bound(6), Fraction(117, 2))
        self.assertEqual(step_bound(18), Fraction(261, 2))
        self.assertEqual(step_bound(24), 234)

    def test_linear_bounds(self):
        self.assertEqual(bound_simple(2), Fraction(261, 2))
        self.assertEqual(bound_simple(100), Fraction(4671, 2))
        self.assertEqual(bound_simple(3) - bound_simple(2), Fraction(45, 2))
        self.assertEqual(bound_derivative(26), Fraction(999, 2))
        n = 10 ** 6
        self.assertLess(abs(bound_derivative(n) / n - Fraction(477, 26)), Fraction(3, 10 ** 5))

    def test_phi(self):
        args = (TowerStep(2, 0), 23, 6, 17, 8)
        self.assertEqual(phi(23, *args), 162)
        self.assertEqual(phi(29, *args), Fraction(513, 2))
        self.assertEqual(phi(29, TowerStep(2, 0), 23, 6, 17), Fraction(513, 2))

    def test_phi_branches_at_vertex(self):
        rows = [(TowerStep(1, 1), 5, 0, 6), (TowerStep(2, 0), 11, 6, 10), (TowerStep(2, 0), 23, 6, 17)]
        for step, n0, g, dg in rows:
            for D in range(1, 2 * dg):
                x = n0 + D - 2
                first = phi(x, step, n0, g, dg, D + 1)
                second = phi(x, step, n0, g, dg, D)
                self.assertEqual(first <= second, dg >= D, (step, D))
                self.assertEqual(second - first, Fraction(9, 2) * (dg - D))
                self.assertEqual(second, Fraction(9, 2) * (x + g + dg + 5))
        self.assertEqual(phi(29, TowerStep(2, 0), 23, 6, 17, 9), 216)

    def test_derivative_ratio_decreases(self):
        ratios = [bound_derivative(n) / n for n in range(2, 201)]
        self.assertTrue(all(a > b for a, b in zip(ratios, ratios[1:])))
        self.assertTrue(all(r > Fraction(477, 26) for r in ratios))

    def test_table_vertices(self):
        points = [(v.x, v.value) for v in table_vertices()]
        self.assertEqual(points, [(5, 54), (13, 108), (29, Fraction(513, 2)), (46, 486)])
        for x, value in points:
            self.assertLessEqual(value, bound_derivative(x))

    def test_vertex_ratio(self):
        self.assertEqual(vertex_ratio_bound(TowerStep(2, 0)), VERTEX_RATIO)
        for k in range(2, 12):
            self.assertLessEqual(vertex_ratio_bound(TowerStep(k, 0)), VERTEX_RATIO)
        ratios = [vertex_ratio_bound(TowerStep(k, 1)) for k in range(1, 12)]
        self.assertTrue(all(r > VERTEX_RATIO for r in ratios))
        self.assertEqual(ratios, sorted(ratios, reverse=True))
        with self.assertRaises(ValueError):
            vertex_ratio_bound(TowerStep(1, 0))


class TestLegacyBounds(unittest.TestCase):

    def test_constants(self):
        legacy = legacy_bounds()
        self.assertEqual(legacy["M2_composed"], Fraction(297, 13))
        self.assertEqual(legacy["M2_remark"], 38)
        self.assertEqual(legacy["C_2"], 54)
        self.assertEqual(legacy["C_3"], 27)
        self.assertIs(legacy["C_q"], linear_rank_constant)

    def test_linear_rank_constant(self):
        self.assertEqual(linear_rank_constant(5), 9)
        self.assertEqual(linear_rank_constant(49), 3)
        self.assertEqual(linear_rank_constant(16), 6)
        self.assertEqual(linear_rank_constant(4), 18)
        with self.assertRaises(ValueError):
            linear_rank_constant(6)


class TestBoundReport(unittest.TestCase):

    def test_json(self):
        data = bound_report(26).to_json()
        self.assertEqual(data["selected_step"]["name"], "H21")
        self.assertEqual((data["derivative_bound"]["num"], data["derivative_bound"]["den"]), (999, 2))
        self.assertEqual(data["legacy_bounds"]["arnaud_composed"]["num"], 594)
        self.assertEqual(data["legacy_bounds"]["arnaud_remark"]["num"], 988)
        self.assertEqual(data["asymptotic_constants"]["M2_derivative"]["den"], 26)


if __name__ == '__main__':
    unittest.main()
