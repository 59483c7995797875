import io
from unittest import TestCase

import numpy as np

from alphalomax.src.core.AlphaLomax import data_test_dir
from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.preprocessors import empirical_preprocessors
from alphalomax.src.exceptions.ParseEmpiricalException import ParseEmpiricalException
from alphalomax.src.exceptions.ReadFileException import ReadFileException


class TestEmpiricalPreprocessors(TestCase):
    def test_centers_file(self):
        data = empirical_preprocessors.load_empirical(self._fixture('empirical_centers.csv'))
        self.assertEqual(len(data), 60)
        self.assertAlmostEqual(data.total_mass, 1.0, places=12)
        np.testing.assert_allclose(data.bin_widths, 0.05, rtol=1e-9)
        self.assertAlmostEqual(data.mean, 2.0, places=3)

    def test_low_mass_is_renormalized(self):
        with self.assertLogs(core_logger, level='WARNING'):
            data = empirical_preprocessors.load_empirical(self._fixture('empirical_low_mass.csv'))
        self.assertAlmostEqual(data.total_mass, 1.0, places=12)

    def test_edges_file(self):
        data = empirical_preprocessors.load_empirical(self._fixture('empirical_edges.csv'))
        np.testing.assert_allclose(data.bin_centers, [0.25, 0.75, 1.25, 1.75, 2.25, 2.75])
        np.testing.assert_allclose(data.densities, [0.1, 0.2, 0.3, 0.4, 0.5, 0.5])
        self.assertAlmostEqual(data.total_mass, 1.0, places=14)

    def test_stream(self):
        data = empirical_preprocessors.load_empirical(io.StringIO('bin_center,density\n0.5,0.5\n1.5,0.5\n'))
        self.assertEqual(len(data), 2)
        self.assertAlmostEqual(data.total_mass, 1.0, places=14)

    def test_errors_carry_line_numbers(self):
        cases = [
            ('empirical_negative_density.csv', 6),
            ('empirical_malformed.csv', 3),
            ('empirical_unsorted.csv', 4),
            ('empirical_bad_header.csv', 1),
        ]
        for filename, line in cases:
            with self.assertRaises(ParseEmpiricalException) as context:
                empirical_preprocessors.load_empirical(self._fixture(filename))
            self.assertEqual(context.exception.line, line, filename)

    def test_single_row(self):
        with self.assertRaises(ParseEmpiricalException):
            empirical_preprocessors.load_empirical(io.StringIO('bin_center,density\n0.5,1.0\n'))

    def test_zero_counts(self):
        with self.assertRaises(ParseEmpiricalException):
            empirical_preprocessors.load_empirical(
                io.StringIO('bin_edge_low,bin_edge_high,count\n0,1,0\n1,2,0\n'))

    def test_missing_file(self):
        with self.assertRaises(ReadFileException):
            empirical_preprocessors.load_empirical(self._fixture('not_there.csv'))

    @staticmethod
    def _fixture(filename: str) -> str:
        return '{}/{}'.format(data_test_dir, filename)
