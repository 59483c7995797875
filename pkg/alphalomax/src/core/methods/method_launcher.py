import math
from typing import Optional

import numpy as np
import pandas as pd

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.core_settings import CoreSettings
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.exceptions.PreconditionException import PreconditionException
from alphalomax.src.core.methods import ber_method, bler_method, capacity_method, fitting_method, \
    montecarlo_method, outage_method, validation_method
from alphalomax.src.core.methods.fitting_helper import Point
from alphalomax.src.core.models.channel import channel_distribution, channel_sampler
from alphalomax.src.core.models.channel.channel_properties import Channel, db_to_linear, make_channel
from alphalomax.src.core.models.empirical.empirical_properties import EmpiricalPdf
from alphalomax.src.core.models.metrics.metrics_properties import METRICS, make_modulation, make_short_packet
from alphalomax.src.core.models.montecarlo.montecarlo_properties import McConfig
from alphalomax.src.core.utils.sweeps import SweepSpec

DISTRIBUTION_FUNCTIONS = ('pdf', 'cdf', 'quantile')


class MethodLauncher():
    def __init__(self, settings: CoreSettings):
        self.settings = settings

    def __getattribute__(self, name):
        method = object.__getattribute__(self, name)
        if hasattr(method, '__call__'):
            core_logger.info('Launching Method {}'.format(name))

        return method

    def distribution_sweep(self, function: str, sweep: SweepSpec) -> pd.DataFrame:
        """
        pdf/cdf rows need gamma, quantile rows need u; alpha, lambda and snr_db come from the
        sweep or its fixed values.
        """
        if function not in DISTRIBUTION_FUNCTIONS:
            raise ParameterException('Unknown distribution function: {}'.format(function),
                                     'Use pdf, cdf or quantile')
        argument = 'u' if function == 'quantile' else 'gamma'

        rows = []
        for row in sweep.rows():
            ch = self._channel(row)
            x = self._required(row, argument)
            if function == 'pdf':
                value = channel_distribution.snr_pdf(ch, x)
            elif function == 'cdf':
                value = channel_distribution.snr_cdf(ch, x)
            else:
                value = channel_distribution.snr_quantile(ch, x)
            rows.append(self._channel_columns(row, ch, {argument: x, function: value}))

        return pd.DataFrame(rows)

    def metrics_sweep(self, metric: str, sweep: SweepSpec, gamma0: float = None, rate: float = None,
                      modulation: str = 'bpsk', phi: float = None, blocklength: int = None,
                      info_bits: int = None) -> pd.DataFrame:
        """Closed-form metric, its high-SNR asymptote and the quadrature fallback flag per row."""
        aux = self._aux(metric, gamma0, rate, modulation, phi, blocklength, info_bits)

        rows = []
        for row in sweep.rows():
            ch = self._channel(row)
            value, asymptote = self._evaluate(metric, ch, aux)
            rows.append(self._channel_columns(row, ch, {
                metric: float(value),
                '{}_asymptotic'.format(metric): asymptote,
                'fallback': int(getattr(value, 'fallback', False)),
            }))

        return pd.DataFrame(rows)

    def simulate_sweep(self, metric: str, sweep: SweepSpec, seed: int, n_samples: int, n_streams: int,
                       gamma0: float = None, rate: float = None, modulation: str = 'bpsk', phi: float = None,
                       blocklength: int = None, info_bits: int = None, bitwise: bool = False) -> pd.DataFrame:
        aux = self._aux(metric, gamma0, rate, modulation, phi, blocklength, info_bits)
        mc = McConfig(seed, n_samples, n_streams, self.settings.montecarlo.chunk_size)
        if metric == 'op':
            aux = outage_method.resolve_threshold(gamma0, rate)

        rows = []
        for row in sweep.rows():
            ch = self._channel(row)
            estimate = montecarlo_method.estimate_metric(metric, ch, aux, mc, bitwise)
            rows.append(self._channel_columns(row, ch, {
                'metric': metric,
                'mean': estimate.mean,
                'std_error': estimate.std_error,
                'ci95_low': estimate.ci95_low,
                'ci95_high': estimate.ci95_high,
                'n_used': estimate.n_used,
            }))

        return pd.DataFrame(rows)

    def sample(self, alpha: float, lam: float, snr_db: float, count: int, seed: int,
               method: str = channel_sampler.INVERSE_CDF, n_streams: int = 1) -> pd.DataFrame:
        ch = make_channel(alpha, lam, db_to_linear(snr_db))
        batch = channel_sampler.sample(ch, count, seed, method, n_streams, self.settings.montecarlo.chunk_size)
        return pd.DataFrame({'snr': batch.values})

    def fit_empirical(self, data: EmpiricalPdf, domain: str, init: Optional[Point] = None) -> dict:
        return fitting_method.fit_rad(data, init, domain, self.settings.optimizer).to_dict()

    def fit_samples(self, samples: np.ndarray, init: Optional[Point] = None) -> dict:
        return fitting_method.fit_mle(samples, init, self.settings.optimizer).to_dict()

    def validate(self, full: bool = False) -> dict:
        checks = validation_method.call(self.settings, full)
        for check in checks:
            for key, value in check.items():
                if isinstance(value, float) and math.isnan(value):
                    check[key] = None

        return {'full': full, 'passed': all(check['passed'] for check in checks), 'checks': checks}

    def _evaluate(self, metric: str, ch: Channel, aux):
        settings = self.settings
        if metric == 'op':
            return outage_method.outage_probability(ch, **aux), \
                   outage_method.outage_asymptotic(ch, **aux).value_at(ch.mean_snr)
        if metric == 'ber':
            return ber_method.ber_exact(ch, aux, settings.contour, settings.quadrature), \
                   ber_method.ber_asymptotic(ch, aux).value_at(ch.mean_snr)
        if metric == 'capacity':
            return capacity_method.capacity_exact(ch, settings.contour, settings.quadrature), \
                   capacity_method.capacity_asymptotic(ch)

        value = bler_method.bler_exact(ch, aux, settings.series, settings.quadrature)
        try:
            asymptote = bler_method.bler_asymptotic(ch, aux)
        except PreconditionException as e:
            core_logger.debug(e.description)
            asymptote = math.nan
        return value, asymptote

    @staticmethod
    def _aux(metric: str, gamma0: float, rate: float, modulation: str, phi: float, blocklength: int,
             info_bits: int):
        if metric not in METRICS:
            raise ParameterException('Unknown metric: {}'.format(metric), 'Use op, ber, capacity or bler')
        if metric == 'op':
            outage_method.resolve_threshold(gamma0, rate)
            return {'gamma0': gamma0, 'rate': rate}
        if metric == 'ber':
            return make_modulation(modulation, phi)
        if metric == 'bler':
            if blocklength is None or info_bits is None:
                raise ParameterException('The bler metric needs a blocklength and a number of information bits')
            return make_short_packet(int(blocklength), int(info_bits))
        return None

    @staticmethod
    def _required(row: dict, name: str) -> float:
        if name not in row:
            raise ParameterException('Missing value for {}'.format(name))
        return row[name]

    def _channel(self, row: dict) -> Channel:
        return make_channel(self._required(row, 'alpha'), self._required(row, 'lambda'),
                            db_to_linear(self._required(row, 'snr_db')))

    @staticmethod
    def _channel_columns(row: dict, ch: Channel, values: dict) -> dict:
        columns = {'alpha': ch.alpha, 'lambda': ch.lam, 'snr_db': row['snr_db'], 'mean_snr': ch.mean_snr}
        columns.update(values)
        return columns
