import unittest
from pathlib import Path
from tempfile import TemporaryDirectory

import polars as pl

from billiardlab.experiments import Column, ResultTable


class TestResultTable(unittest.TestCase):

    def setUp(self):
        self.table = ResultTable("autocorrelation", [("t", "tau"), ("abs_A2", "")], description="|A(t)|^2")
        self.rows = [{"t": 0.0, "abs_A2": 1.0}, {"t": 0.5, "abs_A2": 0.25}]

    def test_columns_are_declared(self):
        self.assertEqual(list(self.table.columns), ["t", "abs_A2"])
        self.assertEqual(str(self.table.columns["t"]), "t (tau)")
        self.assertEqual(str(Column("abs_A2")), "abs_A2")

    def test_add_rows(self):
        self.table.add_rows(self.rows)
        self.table.add_rows({"t": 1.0, "abs_A2": 1.0})
        self.assertEqual(len(self.table), 3)
        self.assertEqual(list(self.table)[1], {"t": 0.5, "abs_A2": 0.25})

    def test_add_dataframe(self):
        self.table.add_rows(pl.DataFrame(self.rows))
        self.assertEqual(self.table.data["abs_A2"].to_list(), [1.0, 0.25])

    def test_undeclared_column_is_rejected(self):
        with self.assertRaises(ValueError):
            self.table.add_rows({"t": 0.0, "phase": 1.0})

    def test_csv_has_header_block(self):
        self.table.add_rows(self.rows)
        with TemporaryDirectory() as tmp:
            path = self.table.write_csv(Path(tmp) / "nested" / "a.csv", header=["version: 0.1.0"])
            lines = path.read_text().splitlines()
            self.assertEqual(lines[0], "# version: 0.1.0")
            self.assertEqual(lines[1], "# columns: t[tau], abs_A2")
            self.assertEqual(lines[2], "t,abs_A2")
            self.assertEqual(len(lines), 5)
            self.assertEqual(list(Path(tmp, "nested").glob(".*.tmp")), [])

    def test_empty_table_still_writes_column_names(self):
        with TemporaryDirectory() as tmp:
            path = self.table.write_csv(Path(tmp) / "empty.csv")
            self.assertEqual(path.read_text().splitlines()[-1], "t,abs_A2")

    def test_gnuplot_output(self):
        self.table.add_rows(self.rows)
        with TemporaryDirectory() as tmp:
            path = self.table.write_gnuplot(Path(tmp) / "a.dat", "t", "abs_A2", header=["square"])
            lines = path.read_text().splitlines()
            self.assertEqual(lines[:2], ["# square", "# t (tau) abs_A2"])
            self.assertEqual(lines[2:], ["0.0 1.0", "0.5 0.25"])
            with self.assertRaises(ValueError):
                self.table.write_gnuplot(Path(tmp) / "b.dat", "t", "phase")


if __name__ == "__main__":
    unittest.main()
