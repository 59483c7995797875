import math
from unittest import TestCase

import numpy as np
from scipy import integrate

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.models.channel import channel_distribution
from alphalomax.src.core.models.channel.channel_properties import make_channel, make_params, mean_envelope_scale, \
    threshold_from_rate, db_to_linear, linear_to_db


class TestChannelProperties(TestCase):
    def test_scale_constant(self):
        self.assertEqual(make_params(1, 2).zeta, 1.0)
        self.assertAlmostEqual(make_params(2, 1).zeta, math.pi ** 2 / 4, places=12)
        self.assertAlmostEqual(make_params(1, 3).zeta, 0.5, places=14)

    def test_scale_constant_is_mean_envelope_to_alpha(self):
        for alpha, lam in ((0.75, 2.0), (1.75, 1.25), (3.0, 0.5)):
            self.assertAlmostEqual(make_params(alpha, lam).zeta, mean_envelope_scale(alpha, lam) ** alpha,
                                   places=12)

    def test_invalid_parameters(self):
        with self.assertRaises(ParameterException):
            make_params(2, 0.4)
        with self.assertRaises(ParameterException):
            make_params(0, 2)
        with self.assertRaises(ParameterException):
            make_channel(1, 2, 0)

    def test_conversions(self):
        self.assertEqual(threshold_from_rate(1.0), 1.0)
        self.assertAlmostEqual(db_to_linear(20), 100.0, places=12)
        self.assertAlmostEqual(linear_to_db(1000.0), 30.0, places=12)
        with self.assertRaises(ParameterException):
            threshold_from_rate(0.0)


class TestChannelDistribution(TestCase):
    def test_pdf_values(self):
        ch = make_channel(1, 2, 1)
        self.assertAlmostEqual(channel_distribution.snr_pdf(ch, 1.0), 0.25, places=14)
        self.assertAlmostEqual(channel_distribution.snr_pdf(ch, 0.0), 2.0, places=14)
        self.assertEqual(channel_distribution.snr_pdf(make_channel(2, 1, 1), 0.0), 0.0)

    def test_pdf_infinite_at_origin(self):
        ch = make_channel(0.75, 2, 1)
        with self.assertLogs(core_logger, level='WARNING'):
            self.assertTrue(math.isinf(channel_distribution.snr_pdf(ch, 0.0)))

    def test_pdf_normalization(self):
        for alpha, lam in ((2.0, 1.25), (1.0, 2.0), (0.75, 3.0)):
            ch = make_channel(alpha, lam, 3.0)
            mass = integrate.quad(lambda g: channel_distribution.snr_pdf(ch, g), 0, np.inf, epsrel=1e-10,
                                  limit=200)[0]
            self.assertAlmostEqual(mass, 1.0, places=7)

    def test_pdf_normalization_extreme_shapes(self):
        for alpha, lam in ((0.5, 2.5), (0.5, 4.0), (3.5, 1.5), (3.5, 0.5)):
            ch = make_channel(alpha, lam, 3.0)
            center = math.log(channel_distribution.snr_quantile(ch, 0.5))
            low, high = center - 100.0 / alpha, center + 100.0 / (alpha * lam)

            def integrand(y):
                g = math.exp(y)
                return channel_distribution.snr_pdf(ch, g) * g

            mass = sum(integrate.quad(integrand, a, b, epsabs=0, epsrel=1e-12, limit=500)[0]
                       for a, b in ((low, center), (center, high)))
            self.assertAlmostEqual(mass, 1.0, places=9, msg='alpha={}, lambda={}'.format(alpha, lam))

    def test_lomax_reduction(self):
        gamma = np.array([0.0, 0.01, 0.5, 2.0, 10.0, 1000.0])
        for lam in (1.25, 1.5, 2.0, 4.0):
            for mean_snr in (0.5, 2.0, 100.0):
                ch = make_channel(1.0, lam, mean_snr)
                scale = 1.0 / ((lam - 1.0) * mean_snr)
                np.testing.assert_allclose(channel_distribution.snr_pdf(ch, gamma),
                                           lam * scale * (1.0 + scale * gamma) ** (-lam - 1.0), rtol=1e-12)
                np.testing.assert_allclose(channel_distribution.snr_cdf(ch, gamma[1:]),
                                           -np.expm1(-lam * np.log1p(scale * gamma[1:])), rtol=1e-12)

    def test_cdf_values(self):
        ch = make_channel(1, 2, 1)
        self.assertAlmostEqual(channel_distribution.snr_cdf(ch, 1.0), 0.75, places=14)
        self.assertEqual(channel_distribution.snr_cdf(ch, 0.0), 0.0)

        values = channel_distribution.snr_cdf(make_channel(1.75, 1.25, 5), np.linspace(0, 100, 101))
        self.assertTrue(np.all(np.diff(values) >= 0))
        self.assertTrue(np.all(values < 1))

    def test_cdf_small_argument_precision(self):
        ch = make_channel(2, 1.25, 1)
        gamma = 1e-9
        expected = ch.lam * ch.kappa * gamma ** 2
        self.assertAlmostEqual(channel_distribution.snr_cdf(ch, gamma) / expected, 1.0, places=9)

    def test_survival(self):
        ch = make_channel(1.75, 1.25, 5)
        gamma = np.array([0.1, 1.0, 50.0])
        np.testing.assert_allclose(channel_distribution.snr_survival(ch, gamma) +
                                   channel_distribution.snr_cdf(ch, gamma), 1.0, rtol=1e-14)

    def test_negative_snr(self):
        ch = make_channel(1, 2, 1)
        with self.assertRaises(DomainException):
            channel_distribution.snr_pdf(ch, -1.0)
        with self.assertRaises(DomainException):
            channel_distribution.snr_cdf(ch, np.array([0.5, -0.1]))

    def test_quantile(self):
        ch = make_channel(1, 2, 1)
        self.assertAlmostEqual(channel_distribution.snr_quantile(ch, 0.75), 1.0, places=13)
        self.assertEqual(channel_distribution.snr_quantile(ch, 0.0), 0.0)

        with self.assertRaises(DomainException):
            channel_distribution.snr_quantile(ch, 1.0)
        with self.assertRaises(DomainException):
            channel_distribution.snr_quantile(ch, -0.1)

    def test_quantile_round_trip(self):
        ch = make_channel(2.5, 1.6, 10)
        self.assertAlmostEqual(channel_distribution.snr_cdf(ch, channel_distribution.snr_quantile(ch, 0.37)), 0.37,
                               places=12)

        levels = np.linspace(0.01, 0.99, 99)
        round_trip = channel_distribution.snr_cdf(ch, channel_distribution.snr_quantile(ch, levels))
        self.assertLess(np.max(np.abs(round_trip - levels)), 1e-12)

    def test_normalized_power_has_unit_mean(self):
        params = make_params(2, 1.25)
        mean = integrate.quad(lambda z: z * channel_distribution.normalized_power_pdf(params, z), 0, np.inf,
                              epsrel=1e-10, limit=200)[0]
        self.assertAlmostEqual(mean, 1.0, places=6)
        self.assertAlmostEqual(channel_distribution.normalized_power_cdf(make_params(1, 2), 1.0), 0.75, places=14)

    def test_mode(self):
        self.assertEqual(channel_distribution.snr_mode(make_channel(1, 2, 1)), 0.0)

        ch = make_channel(2, 1.25, 3)
        mode = channel_distribution.snr_mode(ch)
        grid = np.linspace(0, 4 * mode, 40001)
        numeric = grid[np.argmax(channel_distribution.snr_pdf(ch, grid))]
        self.assertAlmostEqual(numeric, mode, delta=2 * grid[1])

    def test_moment(self):
        self.assertAlmostEqual(channel_distribution.moment(make_channel(1, 3, 1), 2), 4.0, places=12)
        self.assertEqual(channel_distribution.moment(make_channel(1.75, 1.25, 7), 1), 7.0)
        self.assertEqual(channel_distribution.moment(make_channel(1.75, 1.25, 7), 0), 1.0)

        ch = make_channel(2.5, 1.6, 2)
        reference = integrate.quad(lambda g: g ** 1.5 * channel_distribution.snr_pdf(ch, g), 0, np.inf,
                                   epsrel=1e-10, limit=200)[0]
        self.assertAlmostEqual(channel_distribution.moment(ch, 1.5) / reference, 1.0, places=7)

    def test_moment_divergence(self):
        with self.assertRaises(DomainException):
            channel_distribution.moment(make_channel(1, 2, 1), 2)
        with self.assertRaises(DomainException):
            channel_distribution.moment(make_channel(1, 2, 1), -1)

    def test_gmgf(self):
        ch = make_channel(1, 2, 1)
        reference = integrate.quad(lambda g: 2 * (1 + g) ** -3 * math.exp(-g), 0, np.inf, epsabs=0, epsrel=1e-12)[0]
        self.assertLess(abs(channel_distribution.gmgf(ch, 0, 1.0) - reference), 1e-8 * reference)

        ch = make_channel(1.75, 1.25, 10)
        reference = integrate.quad(lambda g: g * math.exp(-0.5 * g) * channel_distribution.snr_pdf(ch, g), 0, np.inf,
                                   epsabs=0, epsrel=1e-11, limit=200)[0]
        self.assertLess(abs(channel_distribution.gmgf(ch, 1, 0.5) - reference), 1e-7 * reference)

    def test_gmgf_domain(self):
        ch = make_channel(1, 2, 1)
        with self.assertRaises(DomainException):
            channel_distribution.gmgf(ch, 0, 0.0)
        with self.assertRaises(DomainException):
            channel_distribution.gmgf(ch, -1, 1.0)
