import os
import tempfile
import unittest

from fourier_codes.analysis import tables
from fourier_codes.analysis.tables import Finding, ReferenceParameters
from fourier_codes.core import eigen
from fourier_codes.core.eigen import Symbol


class TestReference(unittest.TestCase):
    def test_shipped_table(self):
        rows = ReferenceParameters.get_instance().rows
        self.assertEqual(list(range(3, 13)), sorted(rows))
        self.assertEqual((1, 6), rows[8][Symbol.PLUS_J])
        self.assertEqual((2, 4), rows[8][Symbol.MINUS_J])
        self.assertEqual((2, 5), rows[7][Symbol.PLUS_ONE])
        self.assertIsNone(rows[3][Symbol.PLUS_J])
        self.assertIs(rows, ReferenceParameters.get_instance().rows)

    def test_read_reference(self):
        handle, path = tempfile.mkstemp(suffix=".tsv")
        with os.fdopen(handle, "w") as reference_file:
            reference_file.write("N\tk+1\td+1\tk-1\td-1\tk+j\td+j\tk-j\td-j\n"
                                 "4\t2\t2\t1\t4\t-\t-\t1\t2\n\n")
        try:
            self.assertEqual({4: {Symbol.PLUS_ONE: (2, 2),
                                  Symbol.MINUS_ONE: (1, 4),
                                  Symbol.PLUS_J: None,
                                  Symbol.MINUS_J: (1, 2)}},
                             tables.read_reference(path))
        finally:
            os.remove(path)


class TestMultiplicities(unittest.TestCase):
    def test_table_context(self):
        self.assertEqual([13, 5, 41, 73, 29, 17],
                         [tables.table_context(n).p for n in range(3, 9)])

    def test_checks(self):
        checks = tables.check_multiplicities(range(3, 13))
        self.assertEqual(list(range(3, 13)), [check.n for check in checks])
        for check in checks:
            self.assertTrue(check.passed(), check.n)
            self.assertTrue(check.sums_to_n)

        eight = checks[5]
        self.assertEqual(17, eight.modulus.p)
        self.assertEqual(eigen.INTERCHANGED,
                         eight.profile.imaginary_orientation)
        self.assertEqual(3, eight.expected[Symbol.PLUS_ONE])

    def test_render(self):
        text = tables.render_multiplicity_table(
            tables.check_multiplicities([5, 8]))
        lines = text.split("\n")
        self.assertEqual(3, len(lines))
        self.assertTrue(lines[0].split()[:2] == ["N", "p"])
        self.assertTrue(lines[2].endswith("PASS"))
        self.assertIn("interchanged", lines[2])


class TestParameters(unittest.TestCase):
    def test_length_five(self):
        row = tables.parameters_row(tables.table_context(5))
        self.assertEqual(41, row.modulus.p)
        self.assertEqual([(2, 3), (1, 5), (1, 4), (1, 4)],
                         [row.cells[column].parameters()
                          for column in tables.PARAMETER_ORDER])
        self.assertEqual([], tables.compare_with_reference([row]))

    def test_length_seven(self):
        row = tables.parameters_row(tables.table_context(7))
        self.assertEqual(29, row.modulus.p)
        self.assertEqual([(2, 5), (2, 5), (1, 6), (2, 4)],
                         [row.cells[column].parameters()
                          for column in tables.PARAMETER_ORDER])
        self.assertEqual([], tables.compare_with_reference([row]))

    def test_exact_distances_within_bound(self):
        rows = tables.parameters_table(range(3, 13))
        for row in rows:
            for cell in row.cells.values():
                if cell.empty:
                    continue
                self.assertIsNotNone(cell.d_exact)
                self.assertTrue(1 <= cell.d_exact <= cell.d_bound,
                                (row.n, cell.column))

    def test_length_eight_columns(self):
        row = tables.parameters_row(tables.table_context(8),
                                    columns=[Symbol.PLUS_ONE, Symbol.PLUS_J,
                                             Symbol.MINUS_J])
        self.assertEqual((3, 4), row.cells[Symbol.PLUS_ONE].parameters())
        # the imaginary pair is interchanged over GF(17)
        self.assertEqual(Symbol.MINUS_J, row.cells[Symbol.PLUS_J].lam.symbol)
        self.assertEqual(1, row.cells[Symbol.PLUS_J].k)
        self.assertEqual(2, row.cells[Symbol.MINUS_J].k)

    def test_length_eight(self):
        row = tables.parameters_row(tables.table_context(8))
        self.assertEqual([(3, 4), (2, 4), (1, 6), (2, 4)],
                         [row.cells[column].parameters()
                          for column in tables.PARAMETER_ORDER])
        self.assertEqual([], tables.compare_with_reference([row]))

    def test_empty_column(self):
        row = tables.parameters_row(tables.table_context(3), exact=False)
        self.assertTrue(row.cells[Symbol.PLUS_J].empty)
        self.assertIsNone(row.cells[Symbol.PLUS_J].parameters())
        self.assertEqual(1, row.cells[Symbol.MINUS_J].k)

    def test_dimensions_against_reference(self):
        rows = tables.parameters_table(range(3, 13), exact=False)
        self.assertEqual(list(range(3, 13)), [row.n for row in rows])
        for row in rows:
            for cell in row.cells.values():
                self.assertIsNone(cell.d_exact)
                if not cell.empty:
                    self.assertEqual(eigen.multiplicity(row.n, cell.column),
                                     cell.k)

        # the published row for N = 12 has the imaginary columns swapped
        self.assertEqual([Finding(12, Symbol.PLUS_J, (2, None), (3, 4)),
                          Finding(12, Symbol.MINUS_J, (3, None), (2, 6))],
                         tables.compare_with_reference(rows))

    def test_distance_mismatch(self):
        row = tables.parameters_row(tables.table_context(5),
                                    columns=[Symbol.PLUS_ONE])
        reference = {5: {Symbol.PLUS_ONE: (2, 4)}}
        findings = tables.compare_with_reference([row], reference)
        self.assertEqual([Finding(5, Symbol.PLUS_ONE, (2, 3), (2, 4))],
                         findings)
        self.assertEqual("N = 5, column +1: computed k=2 d=3, published "
                         "k=2 d=4", str(findings[0]))
        self.assertEqual([], tables.compare_with_reference(
            [row], {6: {Symbol.PLUS_ONE: (2, 4)}}))

    def test_render(self):
        row = tables.parameters_row(tables.table_context(5),
                                    columns=[Symbol.PLUS_ONE])
        findings = [Finding(5, Symbol.PLUS_ONE, (2, 3), (2, 4))]
        lines = tables.render_parameters_table([row], findings).split("\n")
        self.assertEqual(["N", "p", "k+1", "d+1", "k-1", "d-1", "k+j", "d+j",
                          "k-j", "d-j", "lambda"], lines[0].split())
        self.assertEqual(["5", "41", "2", "3*", "-", "-", "-", "-", "-", "-",
                          "+1=1"], lines[1].split())

        row = tables.parameters_row(tables.table_context(5), exact=False)
        fields = tables.render_parameters_table([row]).split("\n")[1].split()
        self.assertEqual(["2", "<=3", "1", "<=5"], fields[2:6])

        # an empty cell with a finding is marked too
        row = tables.parameters_row(tables.table_context(3), exact=False)
        findings = [Finding(3, Symbol.PLUS_J, None, (1, 2))]
        fields = tables.render_parameters_table([row], findings)
        fields = fields.split("\n")[1].split()
        self.assertEqual(["-", "-*"], fields[6:8])
        self.assertEqual("1", fields[8])


if __name__ == '__main__':
    unittest.main()
