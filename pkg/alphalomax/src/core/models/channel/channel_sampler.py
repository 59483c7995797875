from dataclasses import dataclass
from functools import partial

import numpy as np

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.models.channel.channel_distribution import snr_quantile
from alphalomax.src.core.models.channel.channel_properties import Channel, mean_envelope_scale
from alphalomax.src.core.utils.random_streams import DEFAULT_CHUNK_SIZE, chunk_generator, map_chunks

PHYSICAL = 'physical'
INVERSE_CDF = 'inverse_cdf'


@dataclass(frozen=True)
class SampleBatch:
    values: np.ndarray
    seed: int
    method: str

    def __len__(self):
        return len(self.values)


def _physical_chunk(ch: Channel, gamma_rate: float, omega: float, seed: int, chunk_index: int,
                    size: int) -> np.ndarray:
    rng = chunk_generator(seed, chunk_index)

    tau = rng.gamma(ch.lam, 1.0 / gamma_rate, size)
    sigma = np.sqrt(1.0 / (2.0 * tau))
    in_phase = rng.standard_normal(size) * sigma
    quadrature = rng.standard_normal(size) * sigma

    power = in_phase ** 2 + quadrature ** 2
    envelope = power ** (1.0 / ch.alpha)

    return ch.mean_snr * envelope / omega


def _inverse_chunk(ch: Channel, seed: int, chunk_index: int, size: int) -> np.ndarray:
    rng = chunk_generator(seed, chunk_index)
    return snr_quantile(ch, rng.random(size))


def sample_physical(ch: Channel, count: int, seed: int, n_streams: int = 1,
                    chunk_size: int = DEFAULT_CHUNK_SIZE, gamma_rate: float = 1.0) -> SampleBatch:
    """
    Draws SNR values through the physical generation model:

        tau ~ Gamma(shape lambda, rate gamma_rate)
        X, Y ~ N(0, 1 / (2 tau))            conditional power P = X^2 + Y^2 ~ Exp(tau)
        H = P^(1/alpha),  Z = H / E[H],  G = mean_snr * Z

    gamma_rate cancels through E[H]; it is exposed to check that.
    """
    if not gamma_rate > 0:
        raise ParameterException('Gamma mixing rate must be > 0, got {}'.format(gamma_rate))

    omega = mean_envelope_scale(ch.alpha, ch.lam, gamma_rate)
    core_logger.debug('Physical sampling: {} draws, seed {}, {} streams'.format(count, seed, n_streams))

    chunks = map_chunks(partial(_physical_chunk, ch, gamma_rate, omega), count, seed, n_streams, chunk_size)
    return SampleBatch(np.concatenate(chunks), seed, PHYSICAL)


def sample_inverse(ch: Channel, count: int, seed: int, n_streams: int = 1,
                   chunk_size: int = DEFAULT_CHUNK_SIZE) -> SampleBatch:
    """Inverse-transform sampling: snr_quantile of uniform draws."""
    core_logger.debug('Inverse-CDF sampling: {} draws, seed {}, {} streams'.format(count, seed, n_streams))

    chunks = map_chunks(partial(_inverse_chunk, ch), count, seed, n_streams, chunk_size)
    return SampleBatch(np.concatenate(chunks), seed, INVERSE_CDF)


def sample(ch: Channel, count: int, seed: int, method: str = INVERSE_CDF, n_streams: int = 1,
           chunk_size: int = DEFAULT_CHUNK_SIZE) -> SampleBatch:
    if method == PHYSICAL:
        return sample_physical(ch, count, seed, n_streams, chunk_size)
    if method == INVERSE_CDF:
        return sample_inverse(ch, count, seed, n_streams, chunk_size)
    raise ParameterException('Unknown sampling method: {}'.format(method),
                             'Use {} or {}'.format(PHYSICAL, INVERSE_CDF))
