from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np
from scipy import optimize

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.methods.fitting_helper import ALPHA_START_GRID, POWER, Point, check_domain, \
    from_unconstrained, gradient_norm, initial_simplex, log_likelihood_terms, model_density, scan_alpha, \
    safe_objective, to_unconstrained
from alphalomax.src.core.models.channel.channel_properties import AlphaLomaxParams
from alphalomax.src.core.models.channel.channel_sampler import SampleBatch
from alphalomax.src.core.models.empirical.empirical_divergence import DENSITY_FLOOR, rad
from alphalomax.src.core.models.empirical.empirical_properties import EmpiricalPdf, FitResult

MIN_MLE_SAMPLES = 100
GRADIENT_TOLERANCE = 1e-4
RELATIVE_OBJECTIVE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class OptimizerConfig:
    max_evaluations: int = 5000
    simplex_tolerance: float = 1e-8
    objective_tolerance: float = 1e-14
    alpha_start_grid: Sequence[float] = ALPHA_START_GRID
    density_floor: float = DENSITY_FLOOR


def _minimize(function, start: Point, cfg: OptimizerConfig):
    theta = to_unconstrained(*start)
    objective = safe_objective(function)
    start_value = objective(theta)
    objective_tolerance = cfg.objective_tolerance
    if np.isfinite(start_value):
        objective_tolerance = max(objective_tolerance, RELATIVE_OBJECTIVE_TOLERANCE * abs(start_value))

    return optimize.minimize(objective, theta, method='Nelder-Mead',
                             options={'xatol': cfg.simplex_tolerance,
                                      'fatol': objective_tolerance,
                                      'maxfev': cfg.max_evaluations,
                                      'maxiter': cfg.max_evaluations,
                                      'initial_simplex': initial_simplex(theta)})


def fit_rad(data: EmpiricalPdf, init: Optional[Point] = None, domain: str = POWER,
            cfg: OptimizerConfig = OptimizerConfig()) -> FitResult:
    """
    Fits (alpha, lambda, scale) to a binned density by minimizing the resistor-average
    distance with Nelder-Mead. The scale is the mean of the physical variable: the mean SNR
    for domain='power', E[R] for domain='envelope'.
    """
    check_domain(domain)

    def objective(point: Point) -> float:
        return rad(data, model_density(domain, *point), cfg.density_floor)

    if init is None:
        init, start_value = scan_alpha(objective, data.mean, cfg.alpha_start_grid)
        if init is None:
            raise DomainException('No start grid point gives a finite RAD for the empirical data',
                                  'Check the bins and the declared domain')
        core_logger.info('RAD fit start alpha={}, lambda={}, scale={} (RAD {})'.format(*init, start_value))

    result = _minimize(objective, init, cfg)
    alpha, lam, scale = from_unconstrained(result.x)

    if not result.success:
        core_logger.warning('RAD fit did not converge after {} evaluations: {}'.format(result.nfev, result.message))

    return FitResult(AlphaLomaxParams(alpha, lam), scale, float(result.fun), int(result.nfev),
                     bool(result.success), domain, 'rad')


def negative_log_likelihood(samples: np.ndarray, alpha: float, lam: float, mean_snr: float) -> float:
    return -float(np.sum(log_likelihood_terms(samples, alpha, lam, mean_snr)))


def fit_mle(samples: Union[SampleBatch, np.ndarray], init: Optional[Point] = None,
            cfg: OptimizerConfig = OptimizerConfig()) -> FitResult:
    """
    Maximum-likelihood fit of (alpha, lambda, mean SNR) to raw SNR samples. Converged means
    Nelder-Mead stopped on tolerance and the finite-difference gradient of the negative
    log-likelihood is below 1e-4 times its value.
    """
    values = np.asarray(samples.values if isinstance(samples, SampleBatch) else samples, dtype=float)

    if values.size < MIN_MLE_SAMPLES:
        raise ParameterException('Maximum likelihood fit needs at least {} samples, got {}'.format(
            MIN_MLE_SAMPLES, values.size))
    if np.any(values <= 0) or not np.all(np.isfinite(values)):
        raise DomainException('Maximum likelihood fit needs finite samples > 0')

    def objective(point: Point) -> float:
        return negative_log_likelihood(values, *point)

    if init is None:
        init, _ = scan_alpha(objective, float(np.mean(values)), cfg.alpha_start_grid)
        if init is None:
            raise DomainException('No start grid point gives a finite likelihood for the samples')

    if np.ptp(values) == 0:
        core_logger.warning('All samples are equal; the likelihood has no interior maximum')
        start = from_unconstrained(to_unconstrained(*init))
        return FitResult(AlphaLomaxParams(start[0], start[1]), start[2], objective(start), 0, False, POWER, 'mle')

    result = _minimize(objective, init, cfg)
    point = from_unconstrained(result.x)
    value = float(result.fun)

    try:
        gradient = gradient_norm(objective, point)
    except (ParameterException, DomainException, ValueError):
        gradient = np.inf
    converged = bool(result.success) and gradient <= GRADIENT_TOLERANCE * abs(value)

    if not converged:
        core_logger.warning('Likelihood fit not converged: {} (gradient norm {})'.format(result.message, gradient))

    return FitResult(AlphaLomaxParams(point[0], point[1]), point[2], value, int(result.nfev), converged, POWER,
                     'mle')
