import numpy as np

from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.exceptions.PreconditionException import PreconditionException
from alphalomax.src.core.methods.quadrature_method import QuadratureConfig, closed_form_or_quadrature
from alphalomax.src.core.models.channel.channel_distribution import snr_cdf
from alphalomax.src.core.models.channel.channel_properties import Channel
from alphalomax.src.core.models.metrics.metrics_properties import MetricValue, ShortPacketConfig
from alphalomax.src.core.special_functions.hypergeometric import SeriesConfig, gauss_2f1

ASYMPTOTIC_GUARD = 0.1


def bler_linearized(gamma, packet: ShortPacketConfig):
    if np.any(np.asarray(gamma) < 0):
        raise DomainException('SNR must be >= 0, got {}'.format(gamma))
    result = packet.linearized_bler(gamma)
    if np.ndim(gamma) == 0:
        return float(result)
    return result


def _coefficients(ch: Channel, packet: ShortPacketConfig):
    kappa = ch.kappa
    c1 = packet.slope * ch.alpha * ch.lam * kappa / (1.0 + ch.alpha)
    c2 = (0.5 + packet.slope * packet.eta) * ch.lam * kappa
    return c1, c2


def _theta(ch: Channel, order: int, x: float, series: SeriesConfig) -> float:
    """2F1(1 + lambda, (p + alpha)/alpha; (p + 2 alpha)/alpha; -x)"""
    alpha = ch.alpha
    return gauss_2f1(1.0 + ch.lam, (order + alpha) / alpha, (order + 2.0 * alpha) / alpha, -x,
                     series.tolerance, series.max_terms)


def bler_closed_form(ch: Channel, packet: ShortPacketConfig, series: SeriesConfig = SeriesConfig()) -> float:
    """
    F(mu') - c1 [u^(a+1) T1(k u^a) - mu'^(a+1) T1(k mu'^a)] + c2 [u^a T0(k u^a) - mu'^a T0(k mu'^a)]

    with u = upsilon, mu' = max(mu, 0), k = kappa and Tp the Gauss hypergeometric terms of
    the partial moments of the SNR density.

    Sign of the c2 term: integrating (1/2 + slope eta) f_G over [mu', u] adds mass, so the
    term is added. Subtracting it, as the commonly quoted form of this expression does,
    gives values outside [0, 1] and disagrees with bler_reference at every tested point.
    """
    alpha, kappa = ch.alpha, ch.kappa
    c1, c2 = _coefficients(ch, packet)
    upper, lower = packet.upsilon, packet.lower_limit

    def partial_terms(x):
        if x == 0:
            return 0.0, 0.0
        first = x ** (alpha + 1.0) * _theta(ch, 1, kappa * x ** alpha, series)
        zeroth = x ** alpha * _theta(ch, 0, kappa * x ** alpha, series)
        return first, zeroth

    first_upper, zeroth_upper = partial_terms(upper)
    first_lower, zeroth_lower = partial_terms(lower)

    value = snr_cdf(ch, lower) - c1 * (first_upper - first_lower) + c2 * (zeroth_upper - zeroth_lower)
    return min(max(value, 0.0), 1.0)


def bler_exact(ch: Channel, packet: ShortPacketConfig, series: SeriesConfig = SeriesConfig(),
               quadrature: QuadratureConfig = QuadratureConfig()) -> MetricValue:
    """Average block error rate of the linearized finite-blocklength approximation."""
    return closed_form_or_quadrature(lambda: bler_closed_form(ch, packet, series), 'bler', ch, packet, quadrature)


def bler_asymptotic(ch: Channel, packet: ShortPacketConfig) -> float:
    """
    High-SNR BLER, every 2F1 term replaced by its value at 0:

        lambda k mu'^a - c1 (u^(a+1) - mu'^(a+1)) + c2 (u^a - mu'^a)

    Reduces to lambda k eta for alpha = 1.

    :raise PreconditionException: kappa upsilon^alpha >= 0.1
    """
    alpha, kappa = ch.alpha, ch.kappa
    upper, lower = packet.upsilon, packet.lower_limit

    regime = kappa * upper ** alpha
    if not regime < ASYMPTOTIC_GUARD:
        raise PreconditionException(
            'Mean SNR too low for the BLER asymptote: zeta*upsilon^alpha/mean^alpha = {:.4g} >= {}'.format(
                regime, ASYMPTOTIC_GUARD),
            'Use bler_exact at this operating point')

    c1, c2 = _coefficients(ch, packet)
    return ch.lam * kappa * lower ** alpha - c1 * (upper ** (alpha + 1.0) - lower ** (alpha + 1.0)) + \
        c2 * (upper ** alpha - lower ** alpha)
