import math
from dataclasses import dataclass, field
from typing import Sequence, Tuple

import numpy as np

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.exceptions.ConvergenceException import ConvergenceException
from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.special_functions.gamma_functions import log_gamma_complex

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)
_INITIAL_TRUNCATION = 4.0
_ROUNDING_FACTOR = 64


@dataclass(frozen=True)
class ContourConfig:
    rel_tolerance: float = 1e-10
    max_truncation: float = 400.0
    max_nodes: int = 2 ** 17

    def __post_init__(self):
        if not self.rel_tolerance > 0:
            raise ParameterException('Contour rel_tolerance must be > 0, got {}'.format(self.rel_tolerance))
        if self.max_nodes < 64:
            raise ParameterException('Contour max_nodes must be >= 64, got {}'.format(self.max_nodes))
        if not self.max_truncation > 0:
            raise ParameterException('Contour max_truncation must be > 0, got {}'.format(self.max_truncation))


@dataclass(frozen=True)
class FoxHParams:
    """
    Orders and parameter pairs of H^{m,n}_{p,q}[z | (a_j, A_j); (b_j, B_j)].

    Kernel convention (integrated over a vertical line in the admissible strip):

        prod_{j<=m} G(b_j + B_j s) prod_{j<=n} G(1 - a_j - A_j s)
        ---------------------------------------------------------  z^(-s)
        prod_{j>m} G(1 - b_j - B_j s) prod_{j>n} G(a_j + A_j s)

    Pairs with a zero coefficient contribute constant gamma factors.
    """
    m: int
    n: int
    p: int
    q: int
    upper: Tuple[Tuple[float, float], ...] = field(default=())
    lower: Tuple[Tuple[float, float], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, 'upper', tuple((float(a), float(A)) for a, A in self.upper))
        object.__setattr__(self, 'lower', tuple((float(b), float(B)) for b, B in self.lower))

        if min(self.m, self.n, self.p, self.q) < 0:
            raise ParameterException('Fox H orders must be non-negative: {}'.format(self.orders))
        if self.m > self.q or self.n > self.p:
            raise ParameterException('Fox H orders need 0<=m<=q and 0<=n<=p: {}'.format(self.orders))
        if len(self.upper) != self.p or len(self.lower) != self.q:
            raise ParameterException('Fox H parameter lists must have lengths p={} and q={}'.format(self.p, self.q),
                                     'Got {} upper and {} lower pairs'.format(len(self.upper), len(self.lower)))
        if any(A < 0 for _, A in self.upper) or any(B < 0 for _, B in self.lower):
            raise ParameterException('Fox H coefficients A_j, B_j must be >= 0')

        low, high = self.strip
        if not low < high:
            raise ParameterException('No valid contour strip: max(-b/B)={} >= min((1-a)/A)={}'.format(low, high),
                                     'The pole families of the numerator overlap')
        if not self.decay_rate > 0:
            raise ParameterException('Fox H integrand does not decay on a vertical contour',
                                     'Aggregate coefficient a*={} must be positive'.format(self.aggregate))

    @classmethod
    def build(cls, m: int, n: int, upper: Sequence[Tuple[float, float]],
              lower: Sequence[Tuple[float, float]]) -> 'FoxHParams':
        return cls(m, n, len(upper), len(lower), tuple(upper), tuple(lower))

    @property
    def orders(self) -> Tuple[int, int, int, int]:
        return self.m, self.n, self.p, self.q

    @property
    def strip(self) -> Tuple[float, float]:
        lows = [-b / B for b, B in self.lower[:self.m] if B > 0]
        highs = [(1.0 - a) / A for a, A in self.upper[:self.n] if A > 0]
        return max(lows, default=-math.inf), min(highs, default=math.inf)

    @property
    def contour_abscissa(self) -> float:
        low, high = self.strip
        if math.isinf(low) and math.isinf(high):
            return 0.0
        if math.isinf(low):
            return high - 1.0
        if math.isinf(high):
            return low + 1.0
        return 0.5 * (low + high)

    def abscissa_for(self, z: float) -> float:
        """
        Abscissa placed 1/|ln z| inside the strip edge whose poles carry the leading
        asymptotic term at this z (the left edge for z < 1, the right one for z > 1).

        At distance d from that edge the integrand mass exceeds |H| by about
        e^(d |ln z|) / d, smallest at d = 1/|ln z|. Never further in than the midpoint.
        """
        low, high = self.strip
        middle = self.contour_abscissa
        log_z = math.log(z)
        if log_z < 0 and not math.isinf(low):
            return low + min(-1.0 / log_z, middle - low)
        if log_z > 0 and not math.isinf(high):
            return high - min(1.0 / log_z, high - middle)
        return middle

    @property
    def aggregate(self) -> float:
        numerator = sum(A for _, A in self.upper[:self.n]) + sum(B for _, B in self.lower[:self.m])
        denominator = sum(A for _, A in self.upper[self.n:]) + sum(B for _, B in self.lower[self.m:])
        return numerator - denominator

    @property
    def decay_rate(self) -> float:
        return 0.5 * math.pi * self.aggregate

    def log_constant(self) -> complex:
        """
        Log of the product of the constant (zero coefficient) gamma factors.
        Returns -inf when a denominator constant sits on a gamma pole.

        :raise ParameterException: a numerator constant sits on a gamma pole
        """
        numerator = [b for b, B in self.lower[:self.m] if B == 0] + \
                    [1.0 - a for a, A in self.upper[:self.n] if A == 0]
        denominator = [1.0 - b for b, B in self.lower[self.m:] if B == 0] + \
                      [a for a, A in self.upper[self.n:] if A == 0]

        total = 0j
        for argument in numerator:
            try:
                total += log_gamma_complex(argument)
            except DomainException:
                raise ParameterException('Constant gamma factor G({}) is infinite'.format(argument))
        for argument in denominator:
            try:
                total -= log_gamma_complex(argument)
            except DomainException:
                return complex(-math.inf)
        return total

    def log_kernel(self, s: np.ndarray) -> np.ndarray:
        result = np.zeros_like(s, dtype=complex)
        for b, B in self.lower[:self.m]:
            if B > 0:
                result += log_gamma_complex(b + B * s)
        for a, A in self.upper[:self.n]:
            if A > 0:
                result += log_gamma_complex(1.0 - a - A * s)
        for b, B in self.lower[self.m:]:
            if B > 0:
                result -= log_gamma_complex(1.0 - b - B * s)
        for a, A in self.upper[self.n:]:
            if A > 0:
                result -= log_gamma_complex(a + A * s)
        return result


@dataclass(frozen=True)
class ContourResult:
    value: complex
    error_estimate: float
    truncation: float
    nodes: int


def fox_h(h: FoxHParams, z: float, cfg: ContourConfig = ContourConfig()) -> float:
    """
    Real value of the Fox H-function at z > 0 (see FoxHParams for the kernel).

    :raise DomainException: z <= 0
    :raise ConvergenceException: tolerance not reached within max_truncation and max_nodes
    """
    return fox_h_contour(h, z, cfg).value.real


def fox_h_contour(h: FoxHParams, z: float, cfg: ContourConfig = ContourConfig()) -> ContourResult:
    """
    Mellin-Barnes integral on the vertical line Re(s) = c inside the strip (see
    FoxHParams.abscissa_for).

    With s = c + it the integral becomes (1/2pi) * int f(c + it) dt, evaluated with
    composite Gauss-Legendre panels on [-T, T]. Panels are doubled until two
    consecutive estimates agree, T is doubled until the exponential tail beyond it is
    below tolerance. The imaginary part of the returned value is the quadrature residue.

    :raise ConvergenceException: the panel sum cancels so far that rounding alone
        exceeds rel_tolerance |H|
    """
    if not z > 0:
        raise DomainException('Fox H evaluated at z={}'.format(z), 'Only real z > 0 is supported')

    log_constant = h.log_constant()
    if np.isneginf(log_constant.real):
        return ContourResult(0j, 0.0, 0.0, 0)

    c = h.abscissa_for(z)
    log_z = math.log(z)

    def integrand(t: np.ndarray) -> np.ndarray:
        s = c + 1j * t
        return np.exp(h.log_kernel(s) - s * log_z + log_constant)

    panels_per_unit = max(2.0, 1.0 + abs(log_z) / 4.0)
    truncation = min(_INITIAL_TRUNCATION, cfg.max_truncation)
    while True:
        value, l1_norm, refinement_error, panels_per_unit, nodes = _refine(integrand, truncation,
                                                                           panels_per_unit, cfg)
        edge = np.abs(integrand(np.array([-truncation, truncation]))).sum()
        tail = float(edge) / h.decay_rate
        tolerance = max(cfg.rel_tolerance * abs(value.real), _ROUNDING_FACTOR * np.finfo(float).eps * l1_norm)

        if tail <= tolerance and refinement_error <= tolerance:
            break

        if truncation >= cfg.max_truncation:
            raise ConvergenceException(
                'Fox H contour integral not converged at truncation T={}'.format(truncation),
                'Increase max_truncation or relax rel_tolerance',
                error_estimate=max(tail, refinement_error) / (2 * math.pi))

        truncation = min(2.0 * truncation, cfg.max_truncation)

    rounding = _ROUNDING_FACTOR * np.finfo(float).eps * l1_norm
    if rounding > cfg.rel_tolerance * abs(value.real):
        raise ConvergenceException(
            'Fox H contour sum cancels at z={}: |H| is {:.3g} times the integrand mass'.format(
                z, abs(value.real) / l1_norm if l1_norm > 0 else 0.0),
            'The result carries no more than {:.3g} relative accuracy'.format(
                rounding / abs(value.real) if value.real != 0 else math.inf),
            error_estimate=rounding / (2 * math.pi))

    result = value / (2 * math.pi)
    core_logger.debug('Fox H {} at z={}: {} (T={}, nodes={})'.format(h.orders, z, result, truncation, nodes))

    return ContourResult(result, max(tail, refinement_error) / (2 * math.pi), truncation, nodes)


def _refine(integrand, truncation: float, panels_per_unit: float, cfg: ContourConfig):
    previous = None
    error = None
    while True:
        n_panels = 2 * int(math.ceil(truncation * panels_per_unit))
        nodes = n_panels * len(_GL_NODES)
        if nodes > cfg.max_nodes:
            raise ConvergenceException('Fox H quadrature needs more than {} nodes'.format(cfg.max_nodes),
                                       'Increase max_nodes',
                                       error_estimate=error)

        edges = np.linspace(-truncation, truncation, n_panels + 1)
        half_width = 0.5 * (edges[1:] - edges[:-1])
        middle = 0.5 * (edges[1:] + edges[:-1])
        t = (middle[:, None] + half_width[:, None] * _GL_NODES[None, :]).ravel()
        weights = (half_width[:, None] * _GL_WEIGHTS[None, :]).ravel()

        values = integrand(t)
        estimate = complex(np.sum(weights * values))
        l1_norm = float(np.sum(weights * np.abs(values)))

        if previous is not None:
            error = abs(estimate - previous[0])
            tolerance = max(cfg.rel_tolerance * abs(estimate.real), _ROUNDING_FACTOR * np.finfo(float).eps * l1_norm)
            if error <= tolerance:
                return estimate, l1_norm, error, panels_per_unit / 2.0, nodes

        previous = (estimate, l1_norm)
        panels_per_unit *= 2.0
