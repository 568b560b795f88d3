import unittest

import numpy as np

from algebra.gf2k import field_mul_array
from bilinear.algorithm import BilinearAlgorithm
from bilinear.codegen import codegen, interpret, program_stats
from bilinear.formulas import identity1, karatsuba2, nested4
from construction.synthesis import synthesize


class TestCodegen(unittest.TestCase):

    def test_and_count_equals_rank(self):
        for alg, rank in ((identity1(), 1), (karatsuba2(), 3), (nested4(), 9)):
            self.assertEqual(program_stats(codegen(alg))["and"], rank)

    def test_and_count_synthesized(self):
        for n in (3, 7, 11):
            alg = synthesize(n)
            self.assertEqual(program_stats(codegen(alg))["and"], alg.rank)

    def test_header(self):
        self.assertTrue(codegen(karatsuba2()).startswith("# F_2^2 modulus 7 rank 3\n"))

    def test_interpret_matches_field(self):
        for n in range(1, 9):
            alg = synthesize(n)
            program = codegen(alg)
            xs = np.arange(1 << n, dtype=np.int64)
            grid_x, grid_y = np.meshgrid(xs, xs, indexing='ij')
            out = interpret(program, grid_x, grid_y, n)
            self.assertTrue(np.array_equal(out, field_mul_array(alg.field, grid_x, grid_y)), n)

    def test_interpret_ints(self):
        program = codegen(karatsuba2())
        self.assertEqual(interpret(program, 0b10, 0b10, 2), 0b11)
        self.assertEqual(interpret(program, 0b11, 0b10, 2), 0b01)

    def test_deterministic(self):
        self.assertEqual(codegen(synthesize(9)), codegen(synthesize(9)))

    def test_zero_form_and_empty_output(self):
        alg = BilinearAlgorithm(karatsuba2().field, (0b01, 0), (0b01, 0b11), (0b01, 0))
        program = codegen(alg)
        self.assertIn("z1 = 0", program)
        self.assertEqual(program_stats(program)["and"], 2)
        for x in range(4):
            for y in range(4):
                self.assertEqual(interpret(program, x, y, 2), alg.evaluate_bits(x, y))

    def test_malformed_statement(self):
        with self.assertRaises(ValueError):
            interpret("z0 = x0 | y0\n", 1, 1, 1)


if __name__ == '__main__':
    unittest.main()
