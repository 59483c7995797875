import math
from functools import partial
from typing import Tuple

import numpy as np
from scipy import stats

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.methods.montecarlo_helper import merge_moments, metric_chunk
from alphalomax.src.core.models.channel.channel_distribution import snr_cdf
from alphalomax.src.core.models.channel.channel_properties import Channel
from alphalomax.src.core.models.channel.channel_sampler import SampleBatch
from alphalomax.src.core.models.metrics.metrics_properties import METRICS
from alphalomax.src.core.models.montecarlo.montecarlo_properties import Estimate, McConfig
from alphalomax.src.core.utils.random_streams import map_chunks

KS_CRITICAL_01 = 1.63


def estimate_metric(metric: str, ch: Channel, aux, mc: McConfig, bitwise: bool = False) -> Estimate:
    """
    Monte-Carlo estimate of a metric over inverse-CDF SNR draws.

    aux follows quadrature_reference: gamma0 for op, ModulationScheme for ber, ShortPacketConfig
    for bler. With bitwise=True the BER is estimated from simulated bit decisions instead of
    the conditional error probability.
    """
    if metric not in METRICS:
        raise ParameterException('Unknown metric: {}'.format(metric), 'Use op, ber, capacity or bler')
    if bitwise and metric != 'ber':
        raise ParameterException('Bit-wise simulation only applies to the ber metric')

    core_logger.info('Simulating {} with {} samples on {} streams'.format(metric, mc.n_samples, mc.n_streams))

    chunk_thread = partial(metric_chunk, ch, metric, aux, bitwise)
    moments = map_chunks(chunk_thread, mc.n_samples, mc.seed, mc.n_streams, mc.chunk_size)

    return Estimate.from_moments(*merge_moments(moments))


def ks_critical_value(n: int) -> float:
    return KS_CRITICAL_01 / math.sqrt(n)


def ks_two_sample_critical_value(n: int, m: int) -> float:
    return KS_CRITICAL_01 * math.sqrt((n + m) / (n * m))


def ks_test(batch: SampleBatch, ch: Channel) -> Tuple[float, bool]:
    """One-sample Kolmogorov-Smirnov distance to snr_cdf, passed at the 0.01 level."""
    if len(batch) == 0:
        raise ParameterException('KS test needs a non-empty batch')

    statistic = float(stats.kstest(np.asarray(batch.values), lambda x: snr_cdf(ch, x)).statistic)
    return statistic, statistic < ks_critical_value(len(batch))


def ks_two_sample(batch_a: SampleBatch, batch_b: SampleBatch) -> Tuple[float, bool]:
    n, m = len(batch_a), len(batch_b)
    if n == 0 or m == 0:
        raise ParameterException('Two-sample KS test needs two non-empty batches')

    statistic = float(stats.ks_2samp(batch_a.values, batch_b.values).statistic)
    return statistic, statistic < ks_two_sample_critical_value(n, m)
