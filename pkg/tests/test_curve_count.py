import unittest

from algebra.gf2k import irreducibles_of_degree
from tower.curves import (
    CURVES, PlaceCountError, affine_points, check_condition2, curve, first_table_step,
    mobius_inversion, place_counts, place_counts_report, rational_points,
)


class TestPointCounts(unittest.TestCase):

    def test_affine_points(self):
        self.assertEqual([affine_points(CURVES["H11"], m) for m in (1, 2, 4)], [2, 4, 32])
        self.assertEqual([affine_points(CURVES["H2"], m) for m in (1, 2, 4)], [2, 4, 64])
        self.assertEqual([affine_points(CURVES["H21"], m) for m in (1, 2, 4)], [0, 0, 120])

    def test_rational_points(self):
        self.assertEqual([rational_points(CURVES["H1"], m) for m in (1, 2, 4)], [3, 5, 17])
        self.assertEqual([rational_points(CURVES["H21"], m) for m in (1, 2, 4)], [4, 6, 126])

    def test_unsupported(self):
        with self.assertRaises(ValueError):
            affine_points(CURVES["H1"], 1)
        with self.assertRaises(ValueError):
            affine_points(CURVES["H2"], 3)
        with self.assertRaises(ValueError):
            curve("H5")
        self.assertIs(curve("h21"), CURVES["H21"])


class TestPlaceCounts(unittest.TestCase):

    def test_table_steps(self):
        expected = {"H1": (0, 3, 1, 3), "H11": (2, 3, 1, 7), "H2": (6, 3, 1, 15), "H21": (23, 4, 1, 30)}
        for step_id, values in expected.items():
            c = place_counts(CURVES[step_id])
            self.assertEqual((c.genus, c.N1, c.N2, c.N4), values, step_id)

    def test_rational_function_field(self):
        c = place_counts(CURVES["H1"])
        self.assertEqual(c.N1, len(irreducibles_of_degree(1)) + 1)
        self.assertEqual(c.N2, len(irreducibles_of_degree(2)))
        self.assertEqual(c.N4, len(irreducibles_of_degree(4)))

    def test_inversion_must_be_integral(self):
        self.assertEqual(mobius_inversion({1: 3, 2: 5, 4: 65}), (3, 1, 15))
        with self.assertRaises(PlaceCountError):
            mobius_inversion({1: 3, 2: 4, 4: 17})

    def test_report(self):
        report = place_counts_report(CURVES["H21"])
        self.assertEqual(report["recomputed"]["place_sum"], 126)
        self.assertEqual(report["table"]["place_sum"], 118)
        self.assertEqual(report["place_sum_lower"], 120)
        self.assertEqual(report["matches_paper"], {"genus": True, "N1": True, "N2": True, "N4": False})
        self.assertTrue(all(place_counts_report(CURVES["H2"])["matches_paper"].values()))


class TestCondition(unittest.TestCase):

    def test_condition_boundaries(self):
        cases = [("H1", 5, True), ("H1", 6, False), ("H11", 11, True), ("H11", 12, False),
                 ("H2", 23, True), ("H2", 24, False)]
        for step_id, n, expected in cases:
            self.assertEqual(check_condition2(CURVES[step_id], n), expected, (step_id, n))

    def test_first_table_step(self):
        for n, step_id in ((5, "H1"), (6, "H11"), (12, "H2"), (24, "H21")):
            self.assertEqual(first_table_step(n).id, step_id)
        self.assertIsNone(first_table_step(37))


if __name__ == '__main__':
    unittest.main()
