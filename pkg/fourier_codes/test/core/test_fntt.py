import unittest

import numpy

from fourier_codes.core import fntt
from fourier_codes.core.fntt import ContextError, Sequence
from fourier_codes.core.gf import FieldError
from fourier_codes.core.matrices import Matrix


TEST_CONTEXTS = [(5, 4), (41, 5), (17, 8), (29, 7), (13, 3), (13, 12),
                 (37, 9), (7, 2)]


class TestSequence(unittest.TestCase):
    def setUp(self):
        self.x = Sequence([4, 2, 1, 4], 5)

    def test_access(self):
        self.assertEqual(4, len(self.x))
        self.assertEqual([4, 2, 1, 4], list(self.x))
        self.assertEqual(2, self.x[1])
        self.assertEqual(2, self.x.residue(1).value)
        self.assertEqual("(4, 2, 1, 4)", str(self.x))
        self.assertEqual([0, 4], Sequence([5, -1], 5).to_list())

    def test_arithmetic(self):
        y = Sequence([1, 1, 1, 1], 5)
        self.assertEqual(Sequence([0, 3, 2, 0], 5), self.x + y)
        self.assertEqual(Sequence([3, 1, 0, 3], 5), self.x - y)
        self.assertEqual(Sequence([1, 3, 4, 1], 5), -self.x)
        self.assertEqual(Sequence([3, 4, 2, 3], 5), self.x.scale(2))
        self.assertRaises(ContextError, lambda: self.x + Sequence([1], 5))
        self.assertRaises(FieldError,
                          lambda: self.x + Sequence([1, 1, 1, 1], 7))

    def test_reversed_index(self):
        self.assertEqual(Sequence([1, 4, 3, 2], 5),
                         Sequence([1, 2, 3, 4], 5).reversed_index())
        self.assertEqual(Sequence([1, 5, 4, 3, 2], 7),
                         Sequence([1, 2, 3, 4, 5], 7).reversed_index())

    def test_replacement(self):
        y = self.x.with_entry(0, 7)
        self.assertEqual([2, 2, 1, 4], y.to_list())
        self.assertEqual([4, 2, 1, 4], self.x.to_list())
        self.assertEqual([0, 2, 1, 3],
                         self.x.with_entries({0: 0, 3: -2}).to_list())

    def test_weights(self):
        y = Sequence([0, 3, 0, 2], 5)
        self.assertEqual([1, 3], y.support())
        self.assertEqual(2, y.hamming_weight())
        self.assertEqual(4, y.distance(self.x))
        self.assertTrue(Sequence.zeros(4, 5).is_zero())
        self.assertFalse(y.is_zero())

    def test_symmetry(self):
        self.assertEqual(Sequence([4, 3, 1, 3], 5), fntt.even_part(self.x))
        self.assertEqual(Sequence([0, 4, 0, 1], 5), fntt.odd_part(self.x))
        self.assertTrue(fntt.is_even(fntt.even_part(self.x)))
        self.assertTrue(fntt.is_odd(fntt.odd_part(self.x)))
        self.assertFalse(fntt.is_even(self.x))
        self.assertFalse(fntt.is_odd(self.x))
        self.assertEqual(self.x,
                         fntt.even_part(self.x) + fntt.odd_part(self.x))


class TestContext(unittest.TestCase):
    def test_canonical_defaults(self):
        ctx = fntt.build_context(5, 4)
        self.assertEqual((2, 2, 3, 2), (ctx.alpha.value, ctx.sqrt_n.value,
                                        ctx.inv_sqrt_n.value, ctx.j.value))
        self.assertEqual(3, ctx.half.value)
        self.assertEqual(4, ctx.minus_one.value)
        self.assertEqual(Matrix([[3, 3, 3, 3], [3, 1, 2, 4], [3, 2, 3, 2],
                                 [3, 4, 2, 1]], 5), ctx.transform_matrix)

        ctx = fntt.build_context(41, 5)
        self.assertEqual((10, 13, 19, 9), (ctx.alpha.value, ctx.sqrt_n.value,
                                           ctx.inv_sqrt_n.value, ctx.j.value))

        ctx = fntt.build_context(17, 8)
        self.assertEqual((2, 5, 7, 4), (ctx.alpha.value, ctx.sqrt_n.value,
                                        ctx.inv_sqrt_n.value, ctx.j.value))

        ctx = fntt.build_context(29, 7)
        self.assertEqual((7, 6, 5, 12), (ctx.alpha.value, ctx.sqrt_n.value,
                                         ctx.inv_sqrt_n.value, ctx.j.value))

    def test_no_j(self):
        ctx = fntt.build_context(7, 2)
        self.assertIsNone(ctx.j)
        self.assertFalse(ctx.j_available)
        self.assertRaises(ContextError, fntt.build_context, 7, 2,
                          j_branch=1)

    def test_invalid_parameters(self):
        # 3 does not divide 4
        self.assertRaises(ContextError, fntt.build_context, 5, 3)
        # 3 is no square modulo 7
        self.assertRaises(ContextError, fntt.build_context, 7, 3)
        self.assertRaises(ContextError, fntt.build_context, 41, 1)
        self.assertRaises(ContextError, fntt.build_context, 41, 5, alpha=1)
        self.assertRaises(ContextError, fntt.build_context, 41, 5,
                          sqrt_branch=12)
        self.assertRaises(ContextError, fntt.build_context, 41, 5,
                          j_branch=8)
        self.assertRaises(FieldError, fntt.build_context, 40, 5)

    def test_explicit_branches(self):
        ctx = fntt.build_context(41, 5, alpha=16, sqrt_branch=28, j_branch=32)
        self.assertEqual((16, 28, 32), (ctx.alpha.value, ctx.sqrt_n.value,
                                        ctx.j.value))
        self.assertNotEqual(fntt.build_context(41, 5), ctx)
        self.assertEqual(fntt.build_context(41, 5), fntt.build_context(41, 5))

    def test_check_sequence(self):
        ctx = fntt.build_context(5, 4)
        self.assertRaises(ContextError, ctx.sequence, [1, 2, 3])
        self.assertRaises(ContextError, fntt.forward, ctx,
                          Sequence([1, 2, 3, 4], 13))
        self.assertRaises(ContextError, fntt.inverse, ctx,
                          Sequence([1, 2, 3], 5))


class TestTransform(unittest.TestCase):
    def setUp(self):
        self.contexts = [fntt.build_context(p, n) for p, n in TEST_CONTEXTS]

    def test_small_transform(self):
        ctx = fntt.build_context(5, 4)
        x = ctx.sequence([4, 2, 1, 4])
        spectrum = fntt.forward(ctx, x)
        self.assertEqual(Sequence([3, 2, 2, 1], 5), spectrum)
        self.assertEqual(x, fntt.inverse(ctx, spectrum))

    def test_fourth_power_is_identity(self):
        for ctx in self.contexts:
            self.assertEqual(Matrix.identity(ctx.n, ctx.modulus),
                             ctx.power_matrix(4))

    def test_square_is_reversal(self):
        rng = numpy.random.default_rng(3)
        for ctx in self.contexts:
            x = ctx.sequence(rng.integers(0, ctx.p, size=ctx.n))
            self.assertEqual(x.reversed_index(),
                             Sequence(ctx.power_matrix(2) @ x.entries,
                                      ctx.modulus))

    def test_round_trip(self):
        rng = numpy.random.default_rng(7)
        for ctx in self.contexts:
            for _ in range(100):
                x = ctx.sequence(rng.integers(0, ctx.p, size=ctx.n))
                self.assertEqual(x, fntt.inverse(ctx, fntt.forward(ctx, x)))
                self.assertEqual(x, fntt.forward(ctx, fntt.inverse(ctx, x)))

    def test_inverse_matrix(self):
        for ctx in self.contexts:
            self.assertEqual(Matrix.identity(ctx.n, ctx.modulus),
                             ctx.transform_matrix @ ctx.inverse_matrix)

    def test_int64_limit(self):
        p = 998244353
        # 8 * (p - 1)^2 still fits, 16 * (p - 1)^2 does not
        ctx = fntt.build_context(p, 8)
        x = ctx.sequence([p - 1] * 8)
        self.assertEqual(x, fntt.inverse(ctx, fntt.forward(ctx, x)))
        y = ctx.sequence([p - 1, 0, 1, p - 2, 12345, p - 12345, 7, p - 7])
        self.assertEqual(y, fntt.inverse(ctx, fntt.forward(ctx, y)))
        self.assertEqual(Matrix.identity(8, p), ctx.power_matrix(4))

        self.assertRaises(ContextError, fntt.build_context, p, 16)
        self.assertRaises(ContextError, fntt.check_params, p, 16)
        self.assertRaises(ContextError, fntt.FnttContext, p, 16,
                          pow(3, (p - 1) // 16, p), 4)


if __name__ == '__main__':
    unittest.main()
