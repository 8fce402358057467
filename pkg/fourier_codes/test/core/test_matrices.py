import unittest

import numpy

from fourier_codes.core.gf import FieldError, PrimeModulus
from fourier_codes.core.matrices import Matrix, as_residue_array


class TestMatrix(unittest.TestCase):
    def setUp(self):
        self.gf5 = PrimeModulus(5)
        self.a = Matrix([[2, 4], [1, 3]], 5)

    def test_construction(self):
        m = Matrix([[7, -1], [5, 11]], 5)
        self.assertEqual([[2, 4], [0, 1]], m.to_lists())
        self.assertEqual((2, 2), (m.rows, m.cols))
        self.assertEqual(self.gf5(4), m.entry(0, 1))
        self.assertEqual([0, 1], m.row(1))
        self.assertRaises(ValueError, Matrix, [[1, 2], [3]], 5)
        self.assertRaises(ValueError, Matrix, [1, 2, 3], 5)

    def test_residue_entries(self):
        m = Matrix([[self.gf5(3), 1]], 5)
        self.assertEqual([[3, 1]], m.to_lists())
        self.assertEqual([3, 1], as_residue_array([self.gf5(3), 1]).tolist())
        self.assertRaises(ValueError, as_residue_array, [[1, 2]], 1)

    def test_immutable(self):
        with self.assertRaises(ValueError):
            self.a.entries[0, 0] = 1

    def test_arithmetic(self):
        self.assertEqual(Matrix([[4, 3], [2, 1]], 5), self.a + self.a)
        self.assertTrue((self.a - self.a).is_zero())
        self.assertEqual(Matrix([[3, 1], [4, 2]], 5), -self.a)
        self.assertEqual(Matrix([[4, 3], [2, 1]], 5), self.a.scale(2))
        self.assertRaises(FieldError, lambda: self.a + Matrix([[1]], 7))

    def test_products(self):
        # [[2,4],[1,3]]^2 = [[8,20],[5,13]]
        self.assertEqual(Matrix([[3, 0], [0, 3]], 5), self.a @ self.a)
        self.assertEqual([0, 2], (self.a @ numpy.array([1, 2])).tolist())
        self.assertEqual(Matrix.identity(2, 5), self.a.power(0))
        self.assertEqual(self.a @ self.a @ self.a, self.a.power(3))
        self.assertRaises(ValueError,
                          lambda: self.a @ Matrix([[1, 2, 3]], 5))
        self.assertRaises(ValueError, self.a.power, -1)

    def test_shape_operations(self):
        m = Matrix([[1, 2, 3], [4, 0, 1]], 5)
        self.assertEqual([[1, 4], [2, 0], [3, 1]], m.T.to_lists())
        self.assertEqual([[2, 3], [0, 1]], m.columns(1).to_lists())
        self.assertEqual([[1, 2, 3]], m.take_rows(0, 1).to_lists())
        self.assertEqual([[1, 2, 3, 1, 0], [4, 0, 1, 0, 1]],
                         Matrix.hstack(m, Matrix.identity(2, 5)).to_lists())

    def test_rref(self):
        reduced, pivots = self.a.rref()
        self.assertEqual(Matrix.identity(2, 5), reduced)
        self.assertEqual([0, 1], pivots)

        reduced, pivots = Matrix([[0, 1, 2], [0, 2, 4]], 5).rref()
        self.assertEqual([[0, 1, 2], [0, 0, 0]], reduced.to_lists())
        self.assertEqual([1], pivots)

        reduced, pivots = Matrix([[0, 3, 1], [2, 1, 0]], 5).rref()
        self.assertEqual([[1, 0, 4], [0, 1, 2]], reduced.to_lists())
        self.assertEqual([0, 1], pivots)

    def test_rank(self):
        self.assertEqual(2, self.a.rank())
        self.assertEqual(1, Matrix([[1, 2], [2, 4]], 5).rank())
        self.assertEqual(0, Matrix.zeros(3, 2, 5).rank())

    def test_string_representation(self):
        m = Matrix([[1, 10], [0, 2]], 41)
        self.assertEqual(" 1 10\n 0  2", m.get_string_representation())
        self.assertEqual("", Matrix.zeros(0, 3, 5).get_string_representation())


if __name__ == '__main__':
    unittest.main()
