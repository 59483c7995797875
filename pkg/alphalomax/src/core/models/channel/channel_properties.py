import math
from dataclasses import dataclass

from scipy import special

from alphalomax.src.core.exceptions.ParameterException import ParameterException


@dataclass(frozen=True)
class AlphaLomaxParams:
    """
    Shape pair (alpha, lambda) of the alpha-Lomax model. zeta is derived on access,
    never stored.
    """
    alpha: float
    lam: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise ParameterException('alpha must be > 0, got alpha={}'.format(self.alpha),
                                     'alpha models the nonlinearity of the medium')
        if not self.lam > 1.0 / self.alpha:
            raise ParameterException('lambda must be > 1/alpha, got lambda={} with 1/alpha={}'.format(
                self.lam, 1.0 / self.alpha), 'The mean of the fading envelope is infinite otherwise')

    @property
    def zeta(self) -> float:
        return scale_constant(self.alpha, self.lam)


@dataclass(frozen=True)
class Channel:
    params: AlphaLomaxParams
    mean_snr: float

    def __post_init__(self):
        if not self.mean_snr > 0:
            raise ParameterException('mean SNR must be > 0 (linear scale), got {}'.format(self.mean_snr))

    @property
    def alpha(self) -> float:
        return self.params.alpha

    @property
    def lam(self) -> float:
        return self.params.lam

    @property
    def zeta(self) -> float:
        return self.params.zeta

    @property
    def kappa(self) -> float:
        """zeta / mean_snr^alpha, the coefficient of gamma^alpha in the CDF."""
        return self.params.zeta / self.mean_snr ** self.params.alpha

    def with_mean_snr(self, mean_snr: float) -> 'Channel':
        return Channel(self.params, mean_snr)


def make_params(alpha: float, lam: float) -> AlphaLomaxParams:
    return AlphaLomaxParams(float(alpha), float(lam))


def make_channel(alpha: float, lam: float, mean_snr: float) -> Channel:
    return Channel(make_params(alpha, lam), float(mean_snr))


def scale_constant(alpha: float, lam: float) -> float:
    """
    zeta = (G(1 + 1/alpha) G(lambda - 1/alpha) / G(lambda))^alpha, evaluated in log space.
    For alpha = 1 this is exactly 1 / (lambda - 1).
    """
    if alpha == 1.0:
        return 1.0 / (lam - 1.0)
    log_ratio = special.gammaln(1.0 + 1.0 / alpha) + special.gammaln(lam - 1.0 / alpha) - special.gammaln(lam)
    return math.exp(alpha * log_ratio)


def mean_envelope_scale(alpha: float, lam: float, rate: float = 1.0) -> float:
    """
    Statistical average of H = P^(1/alpha) when the Gamma mixing variable has the
    given rate: rate^(1/alpha) G(1 + 1/alpha) G(lambda - 1/alpha) / G(lambda).
    """
    log_ratio = special.gammaln(1.0 + 1.0 / alpha) + special.gammaln(lam - 1.0 / alpha) - special.gammaln(lam)
    return rate ** (1.0 / alpha) * math.exp(log_ratio)


def threshold_from_rate(rate: float) -> float:
    """Outage SNR threshold 2^R0 - 1 for a target rate R0 in bits/s/Hz."""
    if not rate > 0:
        raise ParameterException('Target rate must be > 0 bits/s/Hz, got {}'.format(rate))
    return 2.0 ** rate - 1.0


def db_to_linear(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


def linear_to_db(value: float) -> float:
    return 10.0 * math.log10(value)
