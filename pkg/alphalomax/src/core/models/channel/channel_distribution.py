import math

import numpy as np
from scipy import special

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.models.channel.channel_properties import Channel, AlphaLomaxParams
from alphalomax.src.core.special_functions.fox_h import ContourConfig, FoxHParams, fox_h


def _as_array(gamma) -> np.ndarray:
    values = np.asarray(gamma, dtype=float)
    if np.any(values < 0) or np.any(np.isnan(values)):
        raise DomainException('SNR must be >= 0, got {}'.format(gamma))
    return values


def _scalar_or_array(result: np.ndarray, like):
    if np.ndim(like) == 0:
        return float(result)
    return result


def snr_pdf(ch: Channel, gamma):
    """
    PDF of the instantaneous SNR:

        f(g) = alpha lambda kappa g^(alpha-1) (1 + kappa g^alpha)^-(lambda+1),  kappa = zeta / mean^alpha

    At g = 0 the density is 0 for alpha > 1, lambda zeta / mean for alpha = 1 and
    +inf for alpha < 1 (integrable singularity, logged as a warning).
    """
    values = _as_array(gamma)
    alpha, lam, kappa = ch.alpha, ch.lam, ch.kappa

    with np.errstate(divide='ignore'):
        result = alpha * lam * kappa * np.power(values, alpha - 1.0) * \
                 np.exp(-(lam + 1.0) * np.log1p(kappa * np.power(values, alpha)))

    if alpha < 1 and np.any(values == 0):
        core_logger.warning('SNR density is infinite at gamma=0 for alpha={} < 1'.format(alpha))

    return _scalar_or_array(result, gamma)


def snr_cdf(ch: Channel, gamma):
    """F(g) = 1 - (1 + kappa g^alpha)^-lambda, evaluated without cancellation for small g."""
    values = _as_array(gamma)
    result = -np.expm1(-ch.lam * np.log1p(ch.kappa * np.power(values, ch.alpha)))
    return _scalar_or_array(result, gamma)


def snr_survival(ch: Channel, gamma):
    values = _as_array(gamma)
    result = np.exp(-ch.lam * np.log1p(ch.kappa * np.power(values, ch.alpha)))
    return _scalar_or_array(result, gamma)


def snr_quantile(ch: Channel, u):
    """
    Inverse of snr_cdf: mean zeta^(-1/alpha) ((1 - u)^(-1/lambda) - 1)^(1/alpha).

    :raise DomainException: u outside [0, 1)
    """
    values = np.asarray(u, dtype=float)
    if np.any(values < 0) or np.any(values >= 1) or np.any(np.isnan(values)):
        raise DomainException('Quantile level must lie in [0, 1), got {}'.format(u))

    result = np.power(np.expm1(-np.log1p(-values) / ch.lam) / ch.kappa, 1.0 / ch.alpha)
    return _scalar_or_array(result, u)


def normalized_power_pdf(params: AlphaLomaxParams, z):
    return snr_pdf(Channel(params, 1.0), z)


def normalized_power_cdf(params: AlphaLomaxParams, z):
    return snr_cdf(Channel(params, 1.0), z)


def snr_mode(ch: Channel) -> float:
    """
    Location of the density maximum: interior for alpha > 1, the origin otherwise
    (the density is non-increasing when alpha <= 1).
    """
    if ch.alpha <= 1:
        return 0.0
    ratio = (ch.alpha - 1.0) / (ch.alpha * ch.lam + 1.0)
    return ch.mean_snr * ch.zeta ** (-1.0 / ch.alpha) * ratio ** (1.0 / ch.alpha)


def moment(ch: Channel, n: float) -> float:
    """
    E[G^n] = mean^n lambda zeta^(-n/alpha) B(1 + n/alpha, lambda - n/alpha), 0 <= n < alpha lambda.

    :raise DomainException: n < 0 or the moment diverges (n >= alpha lambda)
    """
    if n < 0:
        raise DomainException('Moment order must be >= 0, got {}'.format(n))
    if n >= ch.alpha * ch.lam:
        raise DomainException('Moment of order {} diverges'.format(n),
                              'Moments exist only for n < alpha*lambda = {}'.format(ch.alpha * ch.lam))
    if n == 0:
        return 1.0
    if n == 1:
        return ch.mean_snr

    ratio = n / ch.alpha
    log_value = n * math.log(ch.mean_snr) + math.log(ch.lam) - ratio * math.log(ch.zeta) + \
                special.betaln(1.0 + ratio, ch.lam - ratio)
    return math.exp(log_value)


def gmgf_fox_h_params(ch: Channel, n: float) -> FoxHParams:
    return FoxHParams.build(1, 2, upper=[(1.0 - ch.lam, 1.0), (1.0 - n, ch.alpha)], lower=[(1.0, 1.0)])


def gmgf(ch: Channel, n: float, s: float, cfg: ContourConfig = ContourConfig()) -> float:
    """
    Generalized MGF E[G^n exp(-s G)] through the Fox H representation

        alpha / (s^n G(lambda)) H^{1,2}_{2,1}[kappa / s^alpha | (1-lambda,1),(1-n,alpha); (1,1)]

    :raise DomainException: s <= 0 or n < 0
    :raise ConvergenceException: propagated from the contour integration
    """
    if not s > 0:
        raise DomainException('MGF argument s must be > 0, got {}'.format(s))
    if n < 0:
        raise DomainException('MGF order n must be >= 0, got {}'.format(n))

    argument = ch.kappa / s ** ch.alpha
    value = fox_h(gmgf_fox_h_params(ch, n), argument, cfg)
    return ch.alpha / (s ** n * special.gamma(ch.lam)) * value
