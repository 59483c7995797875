from unittest import TestCase

import numpy as np
from scipy import stats

from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.models.empirical.empirical_divergence import kl_divergence, rad
from alphalomax.src.core.models.empirical.empirical_properties import EmpiricalPdf, bin_widths_from_centers, \
    uniform_empirical


def _gaussian(shift: float) -> EmpiricalPdf:
    centers = np.linspace(-10, 11, 4201)
    return uniform_empirical(centers, stats.norm.pdf(centers, loc=shift))


class TestEmpiricalProperties(TestCase):
    def test_bin_widths(self):
        np.testing.assert_allclose(bin_widths_from_centers(np.array([1.0, 2.0, 4.0])), [1.0, 1.5, 2.0])

    def test_masses(self):
        data = uniform_empirical([0.5, 1.5, 2.5], [0.2, 0.4, 0.4])
        self.assertAlmostEqual(data.total_mass, 1.0, places=14)
        self.assertTrue(data.is_normalized())
        self.assertAlmostEqual(data.mean, 1.7, places=14)

        scaled = uniform_empirical([0.5, 1.5, 2.5], [0.1, 0.2, 0.2])
        self.assertFalse(scaled.is_normalized())
        np.testing.assert_allclose(scaled.normalized().densities, [0.2, 0.4, 0.4])

    def test_invalid(self):
        with self.assertRaises(ParameterException):
            uniform_empirical([0.5, 1.5, 1.0], [0.2, 0.4, 0.4])
        with self.assertRaises(ParameterException):
            uniform_empirical([0.5, 1.5], [0.2, -0.4])
        with self.assertRaises(ParameterException):
            EmpiricalPdf([0.5, 1.5], [0.2, 0.4], [1.0])


class TestEmpiricalDivergence(TestCase):
    def test_identical(self):
        data = _gaussian(0.0)
        self.assertAlmostEqual(kl_divergence(data, data), 0.0, places=14)
        self.assertAlmostEqual(rad(data, data), 0.0, places=14)

    def test_shifted_gaussians(self):
        p, q = _gaussian(0.0), _gaussian(1.0)
        self.assertAlmostEqual(kl_divergence(p, q), 0.5, places=3)
        self.assertAlmostEqual(rad(p, q), 0.25, places=3)

    def test_callable_model(self):
        p = _gaussian(0.0)
        self.assertAlmostEqual(kl_divergence(p, lambda x: stats.norm.pdf(x, loc=1.0)), 0.5, places=3)

    def test_rad_is_symmetric(self):
        p, q = _gaussian(0.0), _gaussian(0.4)
        self.assertAlmostEqual(rad(p, q), rad(q, p), places=12)

    def test_rad_below_smaller_kl(self):
        rng = np.random.default_rng(5)
        centers = np.linspace(0.05, 3.0, 60)
        for _ in range(50):
            p = uniform_empirical(centers, rng.random(60) + 1e-3)
            q = uniform_empirical(centers, rng.random(60) + 1e-3)
            smaller = min(kl_divergence(p, q), kl_divergence(q, p))
            self.assertGreater(rad(p, q), 0.0)
            self.assertLessEqual(rad(p, q), smaller * (1.0 + 1e-12))
            self.assertAlmostEqual(rad(p, q) / rad(q, p), 1.0, places=12)

    def test_disjoint_support_is_finite(self):
        centers = np.arange(0.5, 10.5)
        p = uniform_empirical(centers, np.where(centers < 5, 0.2, 0.0))
        q = uniform_empirical(centers, np.where(centers > 5, 0.2, 0.0))
        self.assertTrue(np.isfinite(kl_divergence(p, q)))
        self.assertTrue(np.isfinite(rad(p, q)))

    def test_different_grids(self):
        with self.assertRaises(DomainException):
            kl_divergence(_gaussian(0.0), uniform_empirical([0.0, 1.0], [0.5, 0.5]))
