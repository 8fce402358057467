import unittest
from unittest import mock

from fourier_codes.coding import codes
from fourier_codes.coding import decoders
from fourier_codes.coding import simulation
from fourier_codes.coding.simulation import SimReport
from fourier_codes.core import fntt
from fourier_codes.core.eigen import Eigenvalue


def build_code(p, n, symbol="+1"):
    ctx = fntt.build_context(p, n)
    return codes.construct(ctx, Eigenvalue.parse(ctx, symbol))


class TestTrial(unittest.TestCase):
    def setUp(self):
        self.code = build_code(29, 7)

    def test_reproducible(self):
        first = simulation.run_trial(self.code, 2, 5, 17)
        second = simulation.run_trial(self.code, 2, 5, 17)
        self.assertEqual(first[0], second[0])
        self.assertEqual(first[1], second[1])

    def test_injected_weight(self):
        for index in range(50):
            transmitted, received, outcome = simulation.run_trial(
                self.code, 2, 3, index)
            self.assertTrue(self.code.is_codeword(transmitted))
            self.assertEqual(2, transmitted.distance(received))
            self.assertEqual(transmitted, outcome.codeword)


class TestSimulate(unittest.TestCase):
    def setUp(self):
        self.code = build_code(29, 7)

    def test_no_errors(self):
        report = simulation.simulate(self.code, 0, 30, 1)
        self.assertEqual(30, report.corrected)
        self.assertEqual(30, report.already_codeword)
        self.assertEqual(0, report.failures)

    def test_single_errors(self):
        for code in [build_code(41, 5), self.code, build_code(17, 8)]:
            report = simulation.simulate(code, 1, 100, 8, t_max=1)
            self.assertEqual(100, report.corrected)
            self.assertEqual(0, report.already_codeword)
            self.assertEqual(0, report.miscorrected + report.failures)

    def test_double_errors(self):
        report = simulation.simulate(self.code, 2, 200, 9)
        self.assertEqual(SimReport(200, 2, 200, 0, 0, 0, 9), report)

    def test_counts_add_up(self):
        report = simulation.simulate(build_code(41, 5), 2, 200, 3)
        self.assertEqual(200, report.corrected + report.miscorrected +
                         report.failures)
        self.assertEqual(simulation.GENERATOR_NAME, report.generator)

    def test_independent_of_workers(self):
        report = simulation.simulate(build_code(17, 8), 2, 60, 11)
        self.assertEqual(report, simulation.simulate(build_code(17, 8), 2, 60,
                                                     11, workers=3))
        self.assertEqual(report, simulation.simulate(build_code(17, 8), 2, 60,
                                                     11, workers=1))

    def test_no_trials(self):
        self.assertRaises(ValueError, simulation.simulate, self.code, 1, 0, 4)
        self.assertRaises(ValueError, simulation.simulate, self.code, 1, 0, 4,
                          workers=2)

    def test_pool_closed_on_error(self):
        with mock.patch("multiprocessing.Pool") as pool_class:
            pool = pool_class.return_value
            pool.map.side_effect = RuntimeError("worker died")
            self.assertRaises(RuntimeError, simulation.simulate, self.code,
                              1, 10, 4, workers=2)
            pool_class.assert_called_once_with(2)
            pool.close.assert_called_once_with()
            pool.join.assert_called_once_with()

    def test_invalid_arguments(self):
        self.assertRaises(ValueError, simulation.simulate, self.code, 8, 10, 0)
        self.assertRaises(ValueError, simulation.simulate, self.code, 1, -1, 0)
        self.assertRaises(ValueError, simulation.simulate, self.code, 1, 10, 0,
                          workers=0)

    def test_report(self):
        report = SimReport(10, 1, 9, 1, 0, 0, 2, elapsed=1.5)
        self.assertEqual(SimReport(10, 1, 9, 1, 0, 0, 2), report)
        self.assertEqual(9, report.to_document()["corrected"])
        self.assertIn("miscorrected      1",
                      report.get_string_representation())
        self.assertIn("elapsed           1.500s",
                      report.get_string_representation())

    def test_failures_counted(self):
        report = simulation.simulate(self.code, 4, 100, 12)
        outcomes = [simulation.run_trial(self.code, 4, 12, i)[2].status
                    for i in range(100)]
        self.assertEqual(outcomes.count(decoders.FAILURE), report.failures)


if __name__ == '__main__':
    unittest.main()
