from dataclasses import dataclass

import numpy as np

from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.models.channel.channel_properties import AlphaLomaxParams

NORMALIZATION_TOLERANCE = 0.02


@dataclass(frozen=True)
class EmpiricalPdf:
    """Binned density of a physical variable: bin centers, densities and per-bin widths."""
    bin_centers: np.ndarray
    densities: np.ndarray
    bin_widths: np.ndarray

    def __post_init__(self):
        for name in ('bin_centers', 'densities', 'bin_widths'):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))

        if not (self.bin_centers.ndim == 1 and self.bin_centers.size > 0):
            raise ParameterException('Empirical PDF needs at least one bin')
        if not (self.bin_centers.shape == self.densities.shape == self.bin_widths.shape):
            raise ParameterException('Bin centers, densities and widths must have the same length')
        if np.any(np.diff(self.bin_centers) <= 0):
            raise ParameterException('Bin centers must be strictly increasing')
        if np.any(self.densities < 0) or not np.all(np.isfinite(self.densities)):
            raise ParameterException('Densities must be finite and >= 0')
        if np.any(self.bin_widths <= 0):
            raise ParameterException('Bin widths must be > 0')

    def __len__(self):
        return self.bin_centers.size

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.densities * self.bin_widths))

    @property
    def masses(self) -> np.ndarray:
        mass = self.densities * self.bin_widths
        return mass / np.sum(mass)

    @property
    def mean(self) -> float:
        return float(np.sum(self.bin_centers * self.masses))

    def is_normalized(self, tolerance: float = NORMALIZATION_TOLERANCE) -> bool:
        return abs(self.total_mass - 1.0) <= tolerance

    def normalized(self) -> 'EmpiricalPdf':
        return EmpiricalPdf(self.bin_centers, self.densities / self.total_mass, self.bin_widths)


def uniform_empirical(bin_centers, densities) -> EmpiricalPdf:
    centers = np.asarray(bin_centers, dtype=float)
    widths = bin_widths_from_centers(centers)
    return EmpiricalPdf(centers, densities, widths)


def bin_widths_from_centers(centers: np.ndarray) -> np.ndarray:
    """
    Widths of the bins whose edges are the midpoints between consecutive centers, the
    outer bins mirrored around their center.
    """
    if centers.size < 2:
        raise ParameterException('Bin widths can not be derived from less than two centers')
    midpoints = 0.5 * (centers[1:] + centers[:-1])
    edges = np.concatenate([[2 * centers[0] - midpoints[0]], midpoints, [2 * centers[-1] - midpoints[-1]]])
    return np.diff(edges)


@dataclass(frozen=True)
class FitResult:
    params: AlphaLomaxParams
    scale: float
    objective: float
    n_evals: int
    converged: bool
    domain: str = 'power'
    method: str = 'rad'

    def to_dict(self) -> dict:
        return {
            'method': self.method,
            'domain': self.domain,
            'alpha': self.params.alpha,
            'lambda': self.params.lam,
            'zeta': self.params.zeta,
            'scale': self.scale,
            'objective': self.objective,
            'n_evals': self.n_evals,
            'converged': self.converged,
        }
