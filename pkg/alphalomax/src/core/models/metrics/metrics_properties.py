import math
from dataclasses import dataclass

import numpy as np

from alphalomax.src.core.exceptions.ParameterException import ParameterException

MODULATION_PHI = {
    'bpsk': 1.0,
    'bfsk': 0.5,
    'msk': 0.715,
}


@dataclass(frozen=True)
class ModulationScheme:
    """Coherent binary modulation, described by its BER constant phi: BER = Q(sqrt(2 phi gamma))."""
    name: str
    phi: float

    def __post_init__(self):
        if not 0 < self.phi <= 1:
            raise ParameterException('Modulation constant phi must lie in (0, 1], got {}'.format(self.phi))


def make_modulation(name: str, phi: float = None) -> ModulationScheme:
    key = name.lower()
    if key == 'custom':
        if phi is None:
            raise ParameterException('Custom modulation needs phi', 'Pass phi in (0, 1]')
        return ModulationScheme('custom', float(phi))
    if key not in MODULATION_PHI:
        raise ParameterException('Unknown modulation: {}'.format(name),
                                 'Use one of {} or custom'.format(', '.join(sorted(MODULATION_PHI))))
    return ModulationScheme(key, MODULATION_PHI[key])


@dataclass(frozen=True)
class ShortPacketConfig:
    """
    Linearized finite-blocklength setting: N channel uses carrying K information bits.

        eta = 2^(K/N) - 1
        delta = sqrt(N / 2pi) (2^(2K/N) - 1)^(-1/2)
        mu, upsilon = eta -/+ sqrt(pi / (2 delta^2))
    """
    blocklength: int
    info_bits: int
    eta: float
    delta: float
    mu: float
    upsilon: float

    @property
    def lower_limit(self) -> float:
        return max(self.mu, 0.0)

    @property
    def slope(self) -> float:
        return self.delta / math.sqrt(2.0 * math.pi)

    def linearized_bler(self, gamma):
        """1 below mu, 0 above upsilon, 1/2 - slope (gamma - eta) in between."""
        return np.clip(0.5 - self.slope * (np.asarray(gamma, dtype=float) - self.eta), 0.0, 1.0)


def make_short_packet(blocklength: int, info_bits: int) -> ShortPacketConfig:
    if blocklength < 1:
        raise ParameterException('Blocklength N must be >= 1, got {}'.format(blocklength))
    if info_bits < 1:
        raise ParameterException('Information bits K must be >= 1, got {}'.format(info_bits))

    rate = info_bits / blocklength
    eta = 2.0 ** rate - 1.0
    delta = math.sqrt(blocklength / (2.0 * math.pi)) / math.sqrt(2.0 ** (2.0 * rate) - 1.0)
    half_width = math.sqrt(math.pi / (2.0 * delta ** 2))

    return ShortPacketConfig(int(blocklength), int(info_bits), eta, delta, eta - half_width, eta + half_width)


@dataclass(frozen=True)
class AsymptoteResult:
    """High-SNR power law (coding_gain * mean_snr)^(-diversity_gain)."""
    coding_gain: float
    diversity_gain: float

    def value_at(self, mean_snr: float) -> float:
        return (self.coding_gain * mean_snr) ** (-self.diversity_gain)


class MetricValue(float):
    """
    A metric value that remembers whether it came from the quadrature fallback
    instead of the closed form.
    """

    def __new__(cls, value: float, fallback: bool = False):
        instance = super(MetricValue, cls).__new__(cls, value)
        instance.fallback = fallback
        return instance

    def __repr__(self):
        if self.fallback:
            return 'MetricValue({}, fallback=True)'.format(float(self))
        return 'MetricValue({})'.format(float(self))


METRICS = ('op', 'ber', 'capacity', 'bler')
