import math
from dataclasses import dataclass

from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.utils.random_streams import DEFAULT_CHUNK_SIZE

MIN_SAMPLES = 1000
CI95_Z = 1.96


@dataclass(frozen=True)
class McConfig:
    seed: int
    n_samples: int
    n_streams: int = 1
    chunk_size: int = DEFAULT_CHUNK_SIZE

    def __post_init__(self):
        if self.seed < 0:
            raise ParameterException('Seed must be a non-negative integer, got {}'.format(self.seed))
        if self.n_samples < MIN_SAMPLES:
            raise ParameterException('Monte-Carlo needs at least {} samples, got {}'.format(MIN_SAMPLES,
                                                                                           self.n_samples))
        if self.n_streams < 1:
            raise ParameterException('Number of streams must be >= 1, got {}'.format(self.n_streams))


@dataclass(frozen=True)
class Estimate:
    mean: float
    std_error: float
    ci95_low: float
    ci95_high: float
    n_used: int

    @classmethod
    def from_moments(cls, count: int, mean: float, sum_squares: float) -> 'Estimate':
        """Builds the estimate from a sample count, mean and sum of squared deviations."""
        if count > 1:
            std_error = math.sqrt(sum_squares / (count - 1) / count)
        else:
            std_error = 0.0
        half_width = CI95_Z * std_error
        return cls(mean, std_error, mean - half_width, mean + half_width, count)

    def contains(self, value: float) -> bool:
        return self.ci95_low <= value <= self.ci95_high

    def within(self, value: float, n_errors: float) -> bool:
        return abs(self.mean - value) <= n_errors * self.std_error
