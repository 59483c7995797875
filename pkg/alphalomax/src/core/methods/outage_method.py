from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.models.channel.channel_distribution import snr_cdf
from alphalomax.src.core.models.channel.channel_properties import Channel, threshold_from_rate
from alphalomax.src.core.models.metrics.metrics_properties import AsymptoteResult


def resolve_threshold(gamma0: float = None, rate: float = None) -> float:
    """Outage SNR threshold from either gamma0 or a target rate R0 (gamma0 = 2^R0 - 1)."""
    if (gamma0 is None) == (rate is None):
        raise ParameterException('Outage threshold needs exactly one of gamma0 or rate')
    if rate is not None:
        if not rate > 0:
            raise DomainException('Target rate must be > 0 bits/s/Hz, got {}'.format(rate))
        return threshold_from_rate(rate)
    if not gamma0 > 0:
        raise DomainException('Outage threshold must be > 0, got gamma0={}'.format(gamma0))
    return float(gamma0)


def outage_probability(ch: Channel, gamma0: float = None, rate: float = None) -> float:
    """P(G <= gamma0) = 1 - (1 + kappa gamma0^alpha)^(-lambda)."""
    return snr_cdf(ch, resolve_threshold(gamma0, rate))


def outage_asymptotic(ch: Channel, gamma0: float = None, rate: float = None) -> AsymptoteResult:
    threshold = resolve_threshold(gamma0, rate)
    coding_gain = 1.0 / (threshold * (ch.zeta * ch.lam) ** (1.0 / ch.alpha))
    return AsymptoteResult(coding_gain, ch.alpha)
