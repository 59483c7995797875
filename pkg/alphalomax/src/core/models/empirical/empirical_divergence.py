from typing import Callable, Union

import numpy as np

from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.models.empirical.empirical_properties import EmpiricalPdf

DENSITY_FLOOR = 1e-300

DensityLike = Union[Callable, EmpiricalPdf]


def grid_masses(q: DensityLike, grid: EmpiricalPdf, floor: float = DENSITY_FLOOR) -> np.ndarray:
    """
    Bin probabilities of q on the grid of p, floored and renormalized so both sides of a
    divergence are proper distributions over the same bins.
    """
    if isinstance(q, EmpiricalPdf):
        if len(q) != len(grid) or not np.allclose(q.bin_centers, grid.bin_centers, rtol=1e-12, atol=0):
            raise DomainException('Empirical densities are defined on different bins',
                                  'Rebin both onto a common grid first')
        mass = q.densities * q.bin_widths
    else:
        values = np.asarray(q(grid.bin_centers), dtype=float)
        if np.any(np.isnan(values)) or np.any(values < 0):
            raise DomainException('Model density returned negative or NaN values on the grid')
        mass = values * grid.bin_widths

    mass = np.maximum(mass, floor)
    return mass / np.sum(mass)


def _directed(p: np.ndarray, q: np.ndarray) -> float:
    support = p > 0
    return float(np.sum(p[support] * np.log(p[support] / q[support])))


def kl_divergence(p: EmpiricalPdf, q: DensityLike, floor: float = DENSITY_FLOOR) -> float:
    """D(p || q) on the bins of p, with 0 ln 0 = 0."""
    return max(_directed(p.masses, grid_masses(q, p, floor)), 0.0)


def rad(p: EmpiricalPdf, q: DensityLike, floor: float = DENSITY_FLOOR) -> float:
    """Resistor-average distance D(p||q) D(q||p) / (D(p||q) + D(q||p))."""
    p_mass = np.maximum(p.masses, 0.0)
    q_mass = grid_masses(q, p, floor)

    forward = max(_directed(p_mass, q_mass), 0.0)
    backward = max(_directed(q_mass, np.maximum(p_mass, floor)), 0.0)

    total = forward + backward
    if total == 0:
        return 0.0
    return forward * backward / total
