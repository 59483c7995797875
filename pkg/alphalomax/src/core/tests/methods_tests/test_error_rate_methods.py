import math
from unittest import TestCase

from alphalomax.src.core.methods import ber_method, bler_method
from alphalomax.src.core.exceptions.PreconditionException import PreconditionException
from alphalomax.src.core.methods.quadrature_method import quadrature_reference
from alphalomax.src.core.models.channel.channel_distribution import snr_cdf
from alphalomax.src.core.models.channel.channel_properties import db_to_linear, make_channel
from alphalomax.src.core.models.metrics.metrics_properties import make_modulation, make_short_packet
from alphalomax.src.core.special_functions.hypergeometric import SeriesConfig


class TestBerMethod(TestCase):
    def test_closed_form_matches_quadrature(self):
        bpsk = make_modulation('bpsk')
        for snr_db in (0, 10, 20, 30):
            ch = make_channel(1.75, 1.25, db_to_linear(snr_db))
            value = ber_method.ber_exact(ch, bpsk)
            reference = quadrature_reference('ber', ch, bpsk)
            self.assertLess(abs(value - reference), 1e-5 * reference, '{} dB: {} != {}'.format(snr_db, value,
                                                                                              reference))
            self.assertFalse(value.fallback)

    def test_other_modulations(self):
        ch = make_channel(2, 1.5, db_to_linear(10))
        for name in ('bfsk', 'msk'):
            modulation = make_modulation(name)
            reference = quadrature_reference('ber', ch, modulation)
            self.assertLess(abs(ber_method.ber_exact(ch, modulation) - reference), 1e-5 * reference)

    def test_range_and_monotonicity(self):
        bpsk = make_modulation('bpsk')
        values = [ber_method.ber_exact(make_channel(1.75, 1.25, db_to_linear(snr_db)), bpsk)
                  for snr_db in (0, 10, 20, 30)]
        self.assertTrue(all(0 < value < 0.5 for value in values))
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))

    def test_asymptote(self):
        ch = make_channel(1, 2, 1000)
        asymptote = ber_method.ber_asymptotic(ch, make_modulation('bpsk'))
        self.assertAlmostEqual(asymptote.coding_gain, 2.0, places=12)
        self.assertAlmostEqual(asymptote.diversity_gain, 1.0)
        self.assertAlmostEqual(asymptote.value_at(1000.0), 5e-4, places=14)

        exact = ber_method.ber_exact(ch, make_modulation('bpsk'))
        self.assertLess(abs(asymptote.value_at(1000.0) / exact - 1.0), 0.02)


    def test_steep_channels_at_extreme_snr(self):
        bpsk = make_modulation('bpsk')
        for alpha, lam in ((3.5, 6.0), (7.0, 1.5)):
            for snr_db in (-30, 70, 100):
                ch = make_channel(alpha, lam, db_to_linear(snr_db))
                value = ber_method.ber_exact(ch, bpsk)
                reference = quadrature_reference('ber', ch, bpsk)
                self.assertLess(abs(value - reference), 1e-6 * reference,
                                'alpha={} {} dB: {} != {} (fallback={})'.format(alpha, snr_db, value, reference,
                                                                                value.fallback))

    def test_modulation_ordering(self):
        for snr_db in (0, 20, 40):
            ch = make_channel(1.75, 1.25, db_to_linear(snr_db))
            bpsk, msk, bfsk = (ber_method.ber_exact(ch, make_modulation(name)) for name in ('bpsk', 'msk', 'bfsk'))
            self.assertLess(bpsk, msk)
            self.assertLess(msk, bfsk)

    def test_asymptote_ratio(self):
        bpsk = make_modulation('bpsk')
        errors = []
        for snr_db in (50, 60, 70):
            ch = make_channel(1.75, 1.25, db_to_linear(snr_db))
            ratio = ber_method.ber_asymptotic(ch, bpsk).value_at(ch.mean_snr) / ber_method.ber_exact(ch, bpsk)
            errors.append(abs(ratio - 1.0))
        self.assertLess(errors[0], 0.05)
        self.assertTrue(all(a >= b for a, b in zip(errors, errors[1:])), errors)

    def test_diversity_slope(self):
        for alpha in (1.0, 2.0, 3.0):
            for lam in (1.25, 2.5):
                for name in ('bpsk', 'bfsk'):
                    modulation = make_modulation(name)
                    low = ber_method.ber_exact(make_channel(alpha, lam, db_to_linear(40)), modulation)
                    high = ber_method.ber_exact(make_channel(alpha, lam, db_to_linear(60)), modulation)
                    slope = (math.log10(high) - math.log10(low)) / 2.0
                    self.assertLess(abs(slope / -alpha - 1.0), 0.02,
                                    'alpha={} lambda={} {}: slope {}'.format(alpha, lam, name, slope))


class TestBlerMethod(TestCase):
    def setUp(self):
        self.packet = make_short_packet(100, 50)

    def test_linearized(self):
        self.assertEqual(bler_method.bler_linearized(0.0, self.packet), 1.0)
        self.assertAlmostEqual(bler_method.bler_linearized(self.packet.eta, self.packet), 0.5, places=14)

    def test_closed_form_matches_quadrature(self):
        for alpha, lam, snr_db in ((1.75, 1.25, 5), (1.0, 2.0, 20), (2.5, 1.25, 10)):
            ch = make_channel(alpha, lam, db_to_linear(snr_db))
            value = bler_method.bler_exact(ch, self.packet)
            reference = quadrature_reference('bler', ch, self.packet)
            self.assertLess(abs(value - reference), 1e-6 * reference,
                            'alpha={} {} dB: {} != {}'.format(alpha, snr_db, value, reference))

    def test_zeroth_term_identity(self):
        # lambda x 2F1(1 + lambda, 1; 2; -x) = 1 - (1 + x)^-lambda
        ch = make_channel(1, 2, 1)
        for x in (0.1, 0.7, 3.0):
            theta = bler_method._theta(ch, 0, x, SeriesConfig())
            self.assertAlmostEqual(ch.lam * x * theta, 1.0 - (1.0 + x) ** -ch.lam, places=12)

    def test_limits_and_monotonicity(self):
        values = [bler_method.bler_exact(make_channel(1.75, 1.25, db_to_linear(snr_db)), self.packet)
                  for snr_db in (-30, 0, 10, 20, 40)]
        self.assertAlmostEqual(values[0], 1.0, places=3)
        self.assertLess(values[-1], 1e-3)
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))
        self.assertTrue(all(0 <= value <= 1 for value in values))

    def test_improves_with_blocklength(self):
        ch = make_channel(1.75, 1.25, db_to_linear(5))
        values = [bler_method.bler_exact(ch, make_short_packet(n, 50)) for n in (100, 200, 400)]
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))

    def test_small_blocklength_clamps_lower_limit(self):
        packet = make_short_packet(1, 1)
        self.assertEqual(packet.lower_limit, 0.0)
        ch = make_channel(1.75, 1.25, db_to_linear(10))
        reference = quadrature_reference('bler', ch, packet)
        self.assertLess(abs(bler_method.bler_exact(ch, packet) - reference), 1e-6 * reference)
        self.assertEqual(snr_cdf(ch, packet.lower_limit), 0.0)

    def test_asymptote(self):
        ch = make_channel(1, 2, db_to_linear(40))
        asymptote = bler_method.bler_asymptotic(ch, self.packet)
        self.assertAlmostEqual(asymptote / (2 * self.packet.eta / db_to_linear(40)), 1.0, places=9)
        self.assertLess(abs(asymptote / bler_method.bler_exact(ch, self.packet) - 1.0), 0.05)

    def test_asymptote_slope_and_sign(self):
        for alpha, lam in ((1.0, 2.0), (1.75, 1.25), (2.5, 1.6)):
            low = bler_method.bler_asymptotic(make_channel(alpha, lam, db_to_linear(40)), self.packet)
            high = bler_method.bler_asymptotic(make_channel(alpha, lam, db_to_linear(50)), self.packet)
            self.assertGreater(low, 0.0)
            self.assertAlmostEqual(math.log10(high) - math.log10(low), -alpha, places=9)

    def test_far_below_threshold(self):
        for alpha, lam in ((1.75, 1.25), (1.0, 2.0)):
            for snr_db in (-20, -30, -50):
                ch = make_channel(alpha, lam, db_to_linear(snr_db))
                value = bler_method.bler_exact(ch, self.packet)
                reference = quadrature_reference('bler', ch, self.packet)
                self.assertFalse(value.fallback, 'alpha={} {} dB fell back to quadrature'.format(alpha, snr_db))
                self.assertLess(abs(value - reference), 1e-6 * reference)

    def test_blocklength_grid(self):
        for alpha in (1.0, 1.75):
            for snr_db in (0, 10, 20):
                ch = make_channel(alpha, 1.25, db_to_linear(snr_db))
                values = []
                for n in (100, 200, 400):
                    packet = make_short_packet(n, 50)
                    value = bler_method.bler_exact(ch, packet)
                    reference = quadrature_reference('bler', ch, packet)
                    if reference > 1e-10:
                        self.assertLess(abs(value - reference), 1e-6 * reference,
                                        'alpha={} {} dB N={}: {} != {}'.format(alpha, snr_db, n, value, reference))
                    values.append(value)
                self.assertTrue(all(a > b for a, b in zip(values, values[1:])), values)

    def test_asymptote_guard(self):
        with self.assertRaises(PreconditionException):
            bler_method.bler_asymptotic(make_channel(1, 2, 1), self.packet)
