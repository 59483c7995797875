import math

from scipy import special

from alphalomax.src.core.methods.quadrature_method import QuadratureConfig, closed_form_or_quadrature
from alphalomax.src.core.models.channel.channel_properties import Channel
from alphalomax.src.core.models.metrics.metrics_properties import AsymptoteResult, MetricValue, ModulationScheme
from alphalomax.src.core.special_functions.fox_h import ContourConfig, FoxHParams, fox_h


def ber_fox_h_params(ch: Channel) -> FoxHParams:
    alpha, lam = ch.alpha, ch.lam
    return FoxHParams.build(1, 4,
                            upper=[(0.5, alpha), (0.5, 0.0), (1.0 - lam, 1.0), (1.0, alpha)],
                            lower=[(1.0, 1.0), (0.0, alpha)])


def ber_closed_form(ch: Channel, mod: ModulationScheme, contour: ContourConfig = ContourConfig()) -> float:
    """
    alpha / (2 pi G(lambda)) H^{1,4}_{4,2}[kappa / phi^alpha | (1/2,alpha),(1/2,0),(1-lambda,1),(1,alpha);
                                                              (1,1),(0,alpha)]
    """
    argument = ch.kappa / mod.phi ** ch.alpha
    value = fox_h(ber_fox_h_params(ch), argument, contour)
    return ch.alpha / (2.0 * math.pi * special.gamma(ch.lam)) * value


def ber_exact(ch: Channel, mod: ModulationScheme, contour: ContourConfig = ContourConfig(),
              quadrature: QuadratureConfig = QuadratureConfig()) -> MetricValue:
    return closed_form_or_quadrature(lambda: ber_closed_form(ch, mod, contour), 'ber', ch, mod, quadrature)


def ber_asymptotic(ch: Channel, mod: ModulationScheme) -> AsymptoteResult:
    """Coding gain (2 phi^alpha sqrt(pi) / (lambda zeta G(1/2 + alpha)))^(1/alpha), diversity alpha."""
    alpha = ch.alpha
    log_base = math.log(2.0) + alpha * math.log(mod.phi) + 0.5 * math.log(math.pi) - \
               math.log(ch.lam * ch.zeta) - special.gammaln(0.5 + alpha)
    return AsymptoteResult(math.exp(log_base / alpha), alpha)
