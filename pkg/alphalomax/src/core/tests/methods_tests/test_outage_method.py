import math
from unittest import TestCase

from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.methods import outage_method
from alphalomax.src.core.methods.quadrature_method import quadrature_reference
from alphalomax.src.core.models.channel.channel_distribution import snr_cdf
from alphalomax.src.core.models.channel.channel_properties import db_to_linear, make_channel


class TestOutageMethod(TestCase):
    def test_hand_value(self):
        ch = make_channel(1, 2, 10)
        self.assertAlmostEqual(outage_method.outage_probability(ch, gamma0=1.0), 0.1735537, places=7)
        self.assertEqual(outage_method.outage_probability(ch, gamma0=1.0), snr_cdf(ch, 1.0))
        self.assertEqual(quadrature_reference('op', ch, 1.0), snr_cdf(ch, 1.0))

    def test_rate_threshold(self):
        ch = make_channel(1.75, 1.25, 20)
        self.assertEqual(outage_method.outage_probability(ch, rate=1.0),
                         outage_method.outage_probability(ch, gamma0=1.0))
        self.assertEqual(outage_method.resolve_threshold(rate=2.0), 3.0)

    def test_threshold_errors(self):
        ch = make_channel(1, 2, 10)
        with self.assertRaises(ParameterException):
            outage_method.outage_probability(ch)
        with self.assertRaises(ParameterException):
            outage_method.outage_probability(ch, gamma0=1.0, rate=1.0)
        with self.assertRaises(DomainException):
            outage_method.outage_probability(ch, gamma0=0.0)

    def test_improves_with_alpha_and_lambda(self):
        mean_snr = db_to_linear(20)
        by_alpha = [outage_method.outage_probability(make_channel(alpha, 2.0, mean_snr), gamma0=1.0)
                    for alpha in (1.0, 1.75, 2.0, 3.0)]
        by_lambda = [outage_method.outage_probability(make_channel(1.75, lam, mean_snr), gamma0=1.0)
                     for lam in (1.25, 2.5, 5.0)]
        self.assertTrue(all(a > b for a, b in zip(by_alpha, by_alpha[1:])))
        self.assertTrue(all(a > b for a, b in zip(by_lambda, by_lambda[1:])))

    def test_high_snr_slope(self):
        for alpha in (1.0, 1.75, 2.0, 3.0):
            for lam in (1.25, 2.5):
                low = outage_method.outage_probability(make_channel(alpha, lam, db_to_linear(40)), gamma0=1.0)
                high = outage_method.outage_probability(make_channel(alpha, lam, db_to_linear(60)), gamma0=1.0)
                slope = (math.log10(high) - math.log10(low)) / 2.0
                self.assertLess(abs(slope + alpha), 0.02 * alpha)

    def test_asymptote(self):
        ch = make_channel(1, 2, 100)
        asymptote = outage_method.outage_asymptotic(ch, gamma0=1.0)
        self.assertAlmostEqual(asymptote.coding_gain, 0.5, places=14)
        self.assertAlmostEqual(asymptote.value_at(100.0), 0.02, places=14)
        self.assertLess(abs(asymptote.value_at(100.0) / outage_method.outage_probability(ch, gamma0=1.0) - 1), 0.02)

        asymptote = outage_method.outage_asymptotic(make_channel(2.5, 1.6, 1), gamma0=1.0)
        slope = math.log10(asymptote.value_at(1e6)) - math.log10(asymptote.value_at(1e4))
        self.assertAlmostEqual(slope / 2.0, -2.5, places=9)
