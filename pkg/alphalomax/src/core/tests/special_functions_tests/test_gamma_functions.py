import math
from unittest import TestCase

import numpy as np

from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.special_functions.gamma_functions import EULER_GAMMA, digamma, log_gamma_complex
from alphalomax.src.core.special_functions.gaussian import q_function


class TestGammaFunctions(TestCase):
    def test_log_gamma_real_points(self):
        self.assertAlmostEqual(log_gamma_complex(1.0).real, 0.0, places=14)
        self.assertAlmostEqual(log_gamma_complex(0.5).real, 0.5 * math.log(math.pi), places=14)
        self.assertAlmostEqual(log_gamma_complex(5.0).real, math.log(24.0), places=13)

    def test_log_gamma_conjugate_symmetry(self):
        z = np.array([0.3 + 2.0j, 1.7 - 5.0j, 4.0 + 40.0j])
        np.testing.assert_allclose(log_gamma_complex(np.conj(z)), np.conj(log_gamma_complex(z)), rtol=1e-13)

    def test_log_gamma_recurrence(self):
        z = np.array([0.25 + 1.0j, 2.5 - 3.0j])
        np.testing.assert_allclose(log_gamma_complex(z + 1), log_gamma_complex(z) + np.log(z), rtol=1e-12)

    def test_log_gamma_pole(self):
        for pole in (0.0, -1.0, -7.0):
            with self.assertRaises(DomainException):
                log_gamma_complex(pole)

    def test_digamma(self):
        self.assertAlmostEqual(digamma(1.0), -EULER_GAMMA, places=14)
        self.assertAlmostEqual(digamma(2.0), 1.0 - EULER_GAMMA, places=14)

        with self.assertRaises(DomainException):
            digamma(0.0)

    def test_digamma_is_log_gamma_derivative(self):
        step = 1e-5
        for x in (0.3, 1.7, 5.0, 40.0):
            difference = (log_gamma_complex(x + step).real - log_gamma_complex(x - step).real) / (2 * step)
            self.assertAlmostEqual(digamma(x), difference, places=6, msg='x={}'.format(x))


class TestGaussian(TestCase):
    def test_q_function(self):
        self.assertAlmostEqual(q_function(1.96), 0.0249979, places=7)
        self.assertAlmostEqual(q_function(0.0), 0.5, places=15)

    def test_q_function_far_tail(self):
        value = q_function(30.0)
        self.assertGreater(value, 0.0)
        self.assertAlmostEqual(math.log10(value), -197.31, places=1)

    def test_q_function_array(self):
        values = q_function(np.array([-1.0, 1.0]))
        self.assertAlmostEqual(values[0] + values[1], 1.0, places=15)
