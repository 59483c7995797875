import math

from scipy import special

from alphalomax.src.core.methods.quadrature_method import QuadratureConfig, closed_form_or_quadrature
from alphalomax.src.core.models.channel.channel_properties import Channel
from alphalomax.src.core.models.metrics.metrics_properties import MetricValue
from alphalomax.src.core.special_functions.fox_h import ContourConfig, FoxHParams, fox_h
from alphalomax.src.core.special_functions.gamma_functions import EULER_GAMMA, digamma


def capacity_fox_h_params(ch: Channel) -> FoxHParams:
    alpha, lam = ch.alpha, ch.lam
    return FoxHParams.build(3, 2,
                            upper=[(1.0 - lam, 1.0), (0.0, alpha), (1.0, alpha)],
                            lower=[(1.0, 1.0), (0.0, alpha), (0.0, alpha)])


def capacity_closed_form(ch: Channel, contour: ContourConfig = ContourConfig()) -> float:
    value = fox_h(capacity_fox_h_params(ch), ch.kappa, contour)
    return ch.alpha / (math.log(2.0) * special.gamma(ch.lam)) * value


def capacity_exact(ch: Channel, contour: ContourConfig = ContourConfig(),
                   quadrature: QuadratureConfig = QuadratureConfig()) -> MetricValue:
    """Ergodic capacity E[log2(1 + G)] in bits/s/Hz."""
    return closed_form_or_quadrature(lambda: capacity_closed_form(ch, contour), 'capacity', ch, None, quadrature)


def capacity_asymptotic(ch: Channel) -> float:
    """(1 / (alpha ln2)) [ln(mean^alpha / zeta) - Euler gamma - digamma(lambda)]"""
    log_term = ch.alpha * math.log(ch.mean_snr) - math.log(ch.zeta)
    return (log_term - EULER_GAMMA - digamma(ch.lam)) / (ch.alpha * math.log(2.0))
