import os
from typing import Optional

import numpy as np
import pandas as pd

from alphalomax.src.app.app_logger import app_logger
from alphalomax.src.core.AlphaLomax import AlphaLomax
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.methods.fitting_helper import Point
from alphalomax.src.core.preprocessors import empirical_preprocessors
from alphalomax.src.core.utils.sweeps import build_sweep
from alphalomax.src.exceptions.ParseEmpiricalException import ParseEmpiricalException
from alphalomax.utils import utils

QUANTILE_SWEEP = '0:0.01:0.99'


class LocalMethodLauncher(object):
    def __init__(self, alphalomax_app: AlphaLomax):

        self.alphalomax_app = alphalomax_app

    def __getattribute__(self, name):
        method = object.__getattribute__(self, name)
        if hasattr(method, '__call__'):
            app_logger.info('Launching Method {}'.format(name))

        return method

    def eval_local_method_launcher(self, function: str, alpha: str, lam: str, snr_db: str, gamma: str = None,
                                   u: str = None, output: str = '') -> None:
        if function == 'quantile':
            inputs = {'alpha': alpha, 'lambda': lam, 'snr_db': snr_db, 'u': u}
            sweep = build_sweep(inputs, 'u', QUANTILE_SWEEP)
        else:
            inputs = {'alpha': alpha, 'lambda': lam, 'snr_db': snr_db, 'gamma': gamma}
            sweep = build_sweep(inputs, 'gamma', self.alphalomax_app.settings.gamma_sweep)

        result = self.alphalomax_app.method.distribution_sweep(function, sweep)
        utils.write_data_table(result, output)

    def metrics_local_method_launcher(self, metric: str, alpha: str, lam: str, snr_db: str = None,
                                      gamma0: float = None, rate: float = None, modulation: str = 'bpsk',
                                      phi: float = None, blocklength: int = None, info_bits: int = None,
                                      output: str = '') -> None:
        sweep = self._snr_sweep(alpha, lam, snr_db)
        result = self.alphalomax_app.method.metrics_sweep(metric, sweep, gamma0, rate, modulation, phi, blocklength,
                                                          info_bits)
        utils.write_data_table(result, output)

    def simulate_local_method_launcher(self, metric: str, alpha: str, lam: str, snr_db: str = None,
                                       gamma0: float = None, rate: float = None, modulation: str = 'bpsk',
                                       phi: float = None, blocklength: int = None, info_bits: int = None,
                                       seed: int = None, samples: int = None, streams: int = None,
                                       bitwise: bool = False, output: str = '') -> None:
        defaults = self.alphalomax_app.settings.montecarlo
        seed = defaults.seed if seed is None else int(seed)
        samples = defaults.n_samples if samples is None else int(samples)
        streams = defaults.n_streams if streams is None else int(streams)

        sweep = self._snr_sweep(alpha, lam, snr_db)
        result = self.alphalomax_app.method.simulate_sweep(metric, sweep, seed, samples, streams, gamma0, rate,
                                                           modulation, phi, blocklength, info_bits, bitwise)
        utils.write_data_table(result, output)

    def sample_local_method_launcher(self, alpha: float, lam: float, snr_db: float, method: str,
                                     seed: int = None, samples: int = None, streams: int = None,
                                     output: str = '') -> None:
        defaults = self.alphalomax_app.settings.montecarlo
        seed = defaults.seed if seed is None else int(seed)
        samples = defaults.n_samples if samples is None else int(samples)
        streams = defaults.n_streams if streams is None else int(streams)

        result = self.alphalomax_app.method.sample(float(alpha), float(lam), float(snr_db), samples, seed, method,
                                                   streams)
        utils.write_data_table(result, output)

    def fit_local_method_launcher(self, input_filename: str, method: str = 'rad', domain: str = 'power',
                                  init: str = None, output: str = '') -> dict:
        start = self._parse_init(init)
        path = os.path.realpath(input_filename)

        if method == 'rad':
            data = empirical_preprocessors.load_empirical(path)
            result = self.alphalomax_app.method.fit_empirical(data, domain, start)
        elif method == 'mle':
            samples = self._load_samples(path)
            result = self.alphalomax_app.method.fit_samples(samples, start)
        else:
            raise ParameterException('Unknown fit method: {}'.format(method), 'Use rad or mle')

        utils.write_json(result, output)
        return result

    def validate_local_method_launcher(self, full: bool = False, output: str = '') -> bool:
        report = self.alphalomax_app.method.validate(full)
        utils.write_json(report, output)

        for check in report['checks']:
            if not check['passed']:
                app_logger.warning('Check {} failed: value {} reference {} (error {}, tolerance {}) {}'.format(
                    check['name'], check['value'], check['reference'], check['error'], check['tolerance'],
                    check['message']))
        return report['passed']

    def _snr_sweep(self, alpha: str, lam: str, snr_db: str = None):
        inputs = {'alpha': alpha, 'lambda': lam, 'snr_db': snr_db}
        return build_sweep(inputs, 'snr_db', self.alphalomax_app.settings.snr_db_sweep)

    @staticmethod
    def _parse_init(init: Optional[str]) -> Optional[Point]:
        if not init:
            return None
        try:
            alpha, lam, scale = (float(value) for value in init.split(','))
        except ValueError:
            raise ParameterException('Malformed fit start "{}"'.format(init), 'Write it as alpha,lambda,scale')
        return alpha, lam, scale

    @staticmethod
    def _load_samples(path: str) -> np.ndarray:
        """
        :raise ParseEmpiricalException
        """
        table = utils.read_data_table_from_file(path)
        if 'snr' not in table.columns:
            raise ParseEmpiricalException('Sample file needs an snr column', 'Write samples with the sample command',
                                          line=1)
        values = pd.to_numeric(table['snr'], errors='coerce')
        if values.isna().any():
            raise ParseEmpiricalException('Malformed sample value', line=int(values.isna().idxmax()) + 2)
        return values.to_numpy()
