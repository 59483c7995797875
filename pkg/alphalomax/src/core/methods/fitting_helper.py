import math
from typing import Callable, Optional, Tuple

import numpy as np

from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.models.channel.channel_distribution import moment, snr_pdf
from alphalomax.src.core.models.channel.channel_properties import Channel, AlphaLomaxParams

POWER = 'power'
ENVELOPE = 'envelope'
DOMAINS = (POWER, ENVELOPE)

ALPHA_START_GRID = (0.75, 1.0, 1.5, 2.0, 3.0)

# smallest admissible lambda - 1/alpha used when projecting an infeasible start
MIN_SHAPE_MARGIN = 0.1

Point = Tuple[float, float, float]


def check_domain(domain: str) -> str:
    if domain not in DOMAINS:
        raise ParameterException('Unknown fit domain: {}'.format(domain), 'Use power or envelope')
    return domain


def to_unconstrained(alpha: float, lam: float, scale: float) -> np.ndarray:
    """
    (ln alpha, u, ln scale) with lambda = 1/alpha + exp(u). A start with lambda <= 1/alpha is
    projected onto lambda = 1/alpha + MIN_SHAPE_MARGIN/alpha.
    """
    if not alpha > 0 or not scale > 0:
        raise ParameterException('Fit start needs alpha > 0 and scale > 0, got alpha={}, scale={}'.format(
            alpha, scale))
    margin = max(lam - 1.0 / alpha, MIN_SHAPE_MARGIN / alpha)
    return np.array([math.log(alpha), math.log(margin), math.log(scale)])


def from_unconstrained(theta: np.ndarray) -> Point:
    alpha = math.exp(theta[0])
    return alpha, 1.0 / alpha + math.exp(theta[1]), math.exp(theta[2])


def power_channel(alpha: float, lam: float, scale: float) -> Channel:
    return Channel(AlphaLomaxParams(alpha, lam), scale)


def envelope_mean_snr(params: AlphaLomaxParams, envelope_mean: float) -> float:
    """Mean SNR whose envelope R = sqrt(G) has the given mean."""
    return (envelope_mean / moment(Channel(params, 1.0), 0.5)) ** 2


def model_density(domain: str, alpha: float, lam: float, scale: float) -> Callable:
    """
    Model PDF over the physical variable:
        power:    f_G(x) with mean_snr = scale
        envelope: f_R(r) = 2 r f_G(r^2) with E[R] = scale
    """
    params = AlphaLomaxParams(alpha, lam)
    if check_domain(domain) == POWER:
        ch = Channel(params, scale)
        return lambda x: snr_pdf(ch, np.asarray(x, dtype=float))

    ch = Channel(params, envelope_mean_snr(params, scale))
    return lambda r: 2.0 * np.asarray(r, dtype=float) * snr_pdf(ch, np.asarray(r, dtype=float) ** 2)


def log_likelihood_terms(samples: np.ndarray, alpha: float, lam: float, mean_snr: float) -> np.ndarray:
    """ln f_G at every sample, computed in log space."""
    ch = power_channel(alpha, lam, mean_snr)
    log_kappa = math.log(ch.zeta) - alpha * math.log(mean_snr)
    log_samples = np.log(samples)
    return math.log(alpha * lam) + log_kappa + (alpha - 1.0) * log_samples - \
        (lam + 1.0) * np.logaddexp(0.0, log_kappa + alpha * log_samples)


def safe_objective(function: Callable[[Point], float]) -> Callable[[np.ndarray], float]:
    """Objective over the unconstrained space; points the model can not evaluate map to +inf."""

    def objective(theta: np.ndarray) -> float:
        try:
            with np.errstate(all='ignore'):
                value = function(from_unconstrained(theta))
        except (ParameterException, DomainException, OverflowError, ValueError, ZeroDivisionError):
            return np.inf
        if not np.isfinite(value):
            return np.inf
        return float(value)

    return objective


def scan_alpha(function: Callable[[Point], float], scale: float,
               alpha_start_grid=ALPHA_START_GRID) -> Tuple[Optional[Point], float]:
    """Best (alpha, 1/alpha + 1, scale) of the start grid; ties keep the lowest alpha."""
    objective = safe_objective(function)
    best, best_value = None, np.inf
    for alpha in sorted(alpha_start_grid):
        point = (alpha, 1.0 / alpha + 1.0, scale)
        value = objective(to_unconstrained(*point))
        if value < best_value:
            best, best_value = point, value
    return best, best_value


def initial_simplex(theta: np.ndarray, step: float = 0.1) -> np.ndarray:
    return np.vstack([theta] + [theta + step * np.eye(theta.size)[i] for i in range(theta.size)])


def gradient_norm(function: Callable[[Point], float], point: Point, relative_step: float = 1e-5) -> float:
    """Central finite-difference gradient norm in the natural (alpha, lambda, scale) coordinates."""
    gradient = []
    for i, value in enumerate(point):
        step = relative_step * abs(value)
        upper, lower = list(point), list(point)
        upper[i] += step
        lower[i] -= step
        gradient.append((function(tuple(upper)) - function(tuple(lower))) / (2.0 * step))
    return float(np.linalg.norm(gradient))
