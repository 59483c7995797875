import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate, special

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.exceptions.ConvergenceException import ConvergenceException
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.models.channel.channel_distribution import snr_cdf, snr_pdf, snr_quantile
from alphalomax.src.core.models.channel.channel_properties import Channel
from alphalomax.src.core.models.metrics.metrics_properties import MetricValue, ModulationScheme, \
    ShortPacketConfig

# Q(sqrt(2 phi gamma)) < exp(-750) past this point of the substituted BER integral
_BER_EXPONENT_CUTOFF = 750.0

# quad reports roundoff trouble at epsabs=0 on results that are nonetheless accurate
_ACCEPTED_RELATIVE_ERROR = 1e-7


@dataclass(frozen=True)
class QuadratureConfig:
    epsabs: float = 0.0
    epsrel: float = 1e-10
    limit: int = 500


def integrate_segment(function: Callable, low: float, high: float, cfg: QuadratureConfig, points=None) -> float:
    """
    Adaptive quadrature (QUADPACK through scipy) of one segment.

    :raise ConvergenceException: QUADPACK flags the result and its error estimate is not small
    """
    kwargs = {'epsabs': cfg.epsabs, 'epsrel': cfg.epsrel, 'limit': cfg.limit, 'full_output': 1}
    if points:
        kwargs['points'] = points

    result = integrate.quad(function, low, high, **kwargs)
    value, error = result[0], result[1]

    if len(result) > 3:
        if not np.isfinite(value) or error > _ACCEPTED_RELATIVE_ERROR * abs(value) + 1e-300:
            raise ConvergenceException('Quadrature on [{}, {}] not converged: {}'.format(low, high, result[3]),
                                       'Achieved estimate {} with error {}'.format(value, error),
                                       error_estimate=error)
        core_logger.debug('Quadrature on [{}, {}] accepted with warning: {}'.format(low, high, result[3]))

    return value


def outage_reference(ch: Channel, gamma0: float) -> float:
    return snr_cdf(ch, gamma0)


def ber_reference(ch: Channel, mod: ModulationScheme, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    Average of Q(sqrt(2 phi G)), integrated by parts and substituted with G = u^2:

        int_0^inf F(u^2) sqrt(phi / pi) exp(-phi u^2) du
    """
    phi = mod.phi
    upper = math.sqrt(_BER_EXPONENT_CUTOFF / phi)
    weight = math.sqrt(phi / math.pi)

    def integrand(u):
        return snr_cdf(ch, u * u) * weight * math.exp(-phi * u * u)

    median = math.sqrt(snr_quantile(ch, 0.5))
    points = [median] if 0 < median < upper else None

    return integrate_segment(integrand, 0.0, upper, cfg, points)


def capacity_reference(ch: Channel, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    (1/ln2) int_0^inf (1 - F(g)) / (1 + g) dg on a log-SNR axis g = exp(y), split at the median.
    """
    log_kappa = math.log(ch.kappa)

    def integrand(y):
        survival = math.exp(-ch.lam * np.logaddexp(0.0, log_kappa + ch.alpha * y))
        return survival * special.expit(y)

    center = math.log(snr_quantile(ch, 0.5))
    total = integrate_segment(integrand, -np.inf, center, cfg) + integrate_segment(integrand, center, np.inf, cfg)
    return total / math.log(2.0)


def bler_reference(ch: Channel, packet: ShortPacketConfig, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """F(mu') + int_mu'^upsilon BLER_lin(g) f(g) dg with mu' = max(mu, 0)."""
    lower = packet.lower_limit

    def integrand(gamma):
        return float(packet.linearized_bler(gamma)) * snr_pdf(ch, gamma)

    return snr_cdf(ch, lower) + integrate_segment(integrand, lower, packet.upsilon, cfg)


def quadrature_reference(metric: str, ch: Channel, aux=None, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """
    Numerical evaluation of the defining integral of a metric.

    aux is the outage threshold gamma0 for 'op', a ModulationScheme for 'ber', unused for
    'capacity' and a ShortPacketConfig for 'bler'.
    """
    if metric == 'op':
        return outage_reference(ch, aux)
    if metric == 'ber':
        return ber_reference(ch, aux, cfg)
    if metric == 'capacity':
        return capacity_reference(ch, cfg)
    if metric == 'bler':
        return bler_reference(ch, aux, cfg)

    raise ParameterException('Unknown metric: {}'.format(metric), 'Use op, ber, capacity or bler')


def closed_form_or_quadrature(closed_form: Callable[[], float], metric: str, ch: Channel, aux=None,
                              cfg: QuadratureConfig = QuadratureConfig()) -> MetricValue:
    try:
        return MetricValue(closed_form())
    except ConvergenceException as e:
        core_logger.warning('Closed form for {} did not converge ({}); using quadrature'.format(metric, e.description))
        return MetricValue(quadrature_reference(metric, ch, aux, cfg), fallback=True)
