from unittest import TestCase

from alphalomax.src.app import alphalomax_app
from alphalomax.src.app.app_config import AppConfig
from alphalomax.src.core.core_settings import CoreSettings
from alphalomax.src.core.exceptions.ParameterException import ParameterException


class TestAppConfig(TestCase):
    def test_core_defaults(self):
        config = AppConfig().get_alphalomax_core_config()
        self.assertEqual(config['logger']['level'], 'WARNING')
        self.assertEqual(config['montecarlo']['n_samples'], 1000000)
        self.assertNotIn('app', config)

    def test_test_environment_overrides(self):
        config = AppConfig(environment='test').get_alphalomax_core_config()
        self.assertNotIn('threads', config)
        self.assertNotIn('debug', config)
        self.assertEqual(config['montecarlo']['n_samples'], 20000)
        self.assertEqual(config['montecarlo']['seed'], 1)

    def test_verbosity_flags(self):
        self.assertEqual(AppConfig(verbose=True).get_alphalomax_core_config()['logger']['level'], 'INFO')
        self.assertEqual(AppConfig(verbose=True, debug=True).get_alphalomax_core_config()['logger']['level'],
                         'DEBUG')

    def test_unknown_environment(self):
        with self.assertRaises(ParameterException):
            AppConfig(environment='missing')

    def test_settings(self):
        app = alphalomax_app.create_app(environment='test')
        self.assertEqual(app.settings.montecarlo.chunk_size, 4096)
        self.assertEqual(app.settings.contour.rel_tolerance, 1e-10)
        self.assertEqual(app.settings.optimizer.alpha_start_grid, (0.75, 1.0, 1.5, 2.0, 3.0))
        self.assertEqual(app.settings.snr_db_sweep, '0:2:40')

    def test_unknown_setting(self):
        with self.assertRaises(ParameterException):
            CoreSettings.from_config({'quadrature': {'tolerance': 1e-3}})
