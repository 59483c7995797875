from typing import List, Tuple

import numpy as np

from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.models.channel.channel_distribution import snr_quantile
from alphalomax.src.core.models.channel.channel_properties import Channel
from alphalomax.src.core.special_functions.gaussian import q_function
from alphalomax.src.core.utils.random_streams import chunk_generator

Moments = Tuple[int, float, float]


def sample_transform(metric: str, aux, gamma: np.ndarray) -> np.ndarray:
    """
    Per-sample quantity whose mean is the metric:
        op: indicator gamma <= gamma0
        ber: Q(sqrt(2 phi gamma))
        capacity: log2(1 + gamma)
        bler: linearized block error probability
    """
    if metric == 'op':
        return (gamma <= aux).astype(float)
    if metric == 'ber':
        return q_function(np.sqrt(2.0 * aux.phi * gamma))
    if metric == 'capacity':
        return np.log2(1.0 + gamma)
    if metric == 'bler':
        return aux.linearized_bler(gamma)

    raise ParameterException('Unknown metric: {}'.format(metric), 'Use op, ber, capacity or bler')


def bit_errors(phi: float, gamma: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """One coherent binary symbol per SNR draw: error when the noise flips the decision."""
    noise = rng.standard_normal(gamma.size)
    return (noise < -np.sqrt(2.0 * phi * gamma)).astype(float)


def chunk_moments(values: np.ndarray) -> Moments:
    mean = float(np.mean(values))
    return values.size, mean, float(np.sum((values - mean) ** 2))


def metric_chunk(ch: Channel, metric: str, aux, bitwise: bool, seed: int, chunk_index: int, size: int) -> Moments:
    rng = chunk_generator(seed, chunk_index)
    gamma = snr_quantile(ch, rng.random(size))

    if bitwise:
        return chunk_moments(bit_errors(aux.phi, gamma, rng))
    return chunk_moments(sample_transform(metric, aux, gamma))


def merge_moments(chunks: List[Moments]) -> Moments:
    """Pairwise update of (count, mean, sum of squared deviations), folded in chunk order."""
    count, mean, sum_squares = chunks[0]
    for other_count, other_mean, other_squares in chunks[1:]:
        total = count + other_count
        delta = other_mean - mean
        mean = mean + delta * other_count / total
        sum_squares = sum_squares + other_squares + delta * delta * count * other_count / total
        count = total
    return count, mean, sum_squares
