import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.exceptions.ConvergenceException import ConvergenceException
from alphalomax.src.core.exceptions.DomainException import DomainException

SERIES_TOLERANCE = 1e-12
MAX_TERMS = 10 ** 6
DIRECT_SERIES_RADIUS = 0.5
INVERSE_ARGUMENT_LIMIT = -2.0

_BLOCK = 512
_INTEGER_ATOL = 1e-12


@dataclass(frozen=True)
class SeriesConfig:
    tolerance: float = SERIES_TOLERANCE
    max_terms: int = MAX_TERMS


def _is_non_positive_integer(x: float) -> bool:
    return x <= 0 and x == np.round(x)


def gauss_2f1(a: float, b: float, c: float, z: float, tolerance: float = SERIES_TOLERANCE,
              max_terms: int = MAX_TERMS, method: str = 'auto') -> float:
    """
    Gauss hypergeometric function 2F1(a, b; c; z) for real arguments with z < 1.

    Strategy:
        - |z| <= 0.5 and 0 <= z < 1: power series.
        - -2 <= z < -0.5: Pfaff transformation
              2F1(a, b; c; z) = (1 - z)^(-a) 2F1(a, c - b; c; z / (z - 1))
          with the smaller of (a, b) used as the exponent, so the series argument
          lies in (1/3, 2/3].
        - z < -2: connection formula to two series in 1/z, or its logarithmic limit
          when b - a is an integer. Terminating series (a or b a non-positive integer)
          stay on the Pfaff branch.

    method: 'auto', 'series', 'pfaff' or 'inverse' (the last three force one branch; the
    series branch still requires |z| < 1, the inverse branch z < -1).

    :raise DomainException: c is a non-positive integer or z >= 1
    :raise ConvergenceException: series not converged after max_terms
    """
    if _is_non_positive_integer(c):
        raise DomainException('2F1 lower parameter c={} is a non-positive integer'.format(c),
                              'The series is undefined for this parameter combination')
    if not z < 1:
        raise DomainException('2F1 evaluated at z={}'.format(z), 'Only real z < 1 is supported')

    if method == 'auto':
        if z < INVERSE_ARGUMENT_LIMIT and not (_is_non_positive_integer(a) or _is_non_positive_integer(b)):
            method = 'inverse'
        elif z < -DIRECT_SERIES_RADIUS:
            method = 'pfaff'
        else:
            method = 'series'

    if method == 'series':
        if abs(z) >= 1:
            raise DomainException('Power series of 2F1 needs |z| < 1, got z={}'.format(z),
                                  'Use the Pfaff branch for z <= -1')
        return _series(a, b, c, z, tolerance, max_terms)

    if method == 'pfaff':
        if a > b:
            a, b = b, a
        w = z / (z - 1.0)
        return (1.0 - z) ** (-a) * _series(a, c - b, c, w, tolerance, max_terms)

    if method == 'inverse':
        if not z < -1:
            raise DomainException('Inverse-argument 2F1 needs z < -1, got z={}'.format(z),
                                  'Use the series or Pfaff branch')
        if a > b:
            a, b = b, a
        shift = b - a
        if abs(shift - round(shift)) <= _INTEGER_ATOL:
            return _inverse_integer_shift(a, int(round(shift)), c, z, tolerance, max_terms)
        return _inverse(a, b, c, z, tolerance, max_terms)

    raise DomainException('Unknown 2F1 evaluation method: {}'.format(method),
                          'Use auto, series, pfaff or inverse')


def _inverse(a: float, b: float, c: float, z: float, tolerance: float, max_terms: int) -> float:
    """
    2F1(a, b; c; z) = G(c)G(b-a) / (G(b)G(c-a)) (-z)^(-a) 2F1(a, 1-c+a; 1-b+a; 1/z)
                    + G(c)G(a-b) / (G(a)G(c-b)) (-z)^(-b) 2F1(b, 1-c+b; 1-a+b; 1/z)
    """
    x = -z
    w = 1.0 / z
    first = special.gamma(b - a) * special.rgamma(b) * special.rgamma(c - a) * x ** (-a) * \
        _series(a, 1.0 - c + a, 1.0 - b + a, w, tolerance, max_terms)
    second = special.gamma(a - b) * special.rgamma(a) * special.rgamma(c - b) * x ** (-b) * \
        _series(b, 1.0 - c + b, 1.0 - a + b, w, tolerance, max_terms)
    return float(special.gamma(c) * (first + second))


def _psi_over_gamma(x: float) -> float:
    """psi(x) / G(x), continued to its finite limit (-1)^(n+1) n! at x = -n."""
    if _is_non_positive_integer(x):
        n = int(-round(x))
        return (-1.0) ** (n + 1) * math.factorial(n)
    return float(special.psi(x) * special.rgamma(x))


def _inverse_integer_shift(a: float, m: int, c: float, z: float, tolerance: float, max_terms: int) -> float:
    """
    Connection formula for b = a + m, m = 0, 1, 2, ..., with x = -z > 1:

        2F1 / G(c) = x^(-a) / G(a+m) sum_{k<m} (a)_k (m-k-1)! / (k! G(c-a-k)) z^(-k)
                   + x^(-a) / G(a) sum_{k>=0} (a+m)_k / (k! (k+m)!) x^(-k) z^(-m)
                       [(ln x + psi(k+1) + psi(k+m+1) - psi(a+k+m)) / G(c-a-k-m) - psi/G(c-a-k-m)]
    """
    x = -z
    log_x = math.log(x)

    head = 0.0
    pochhammer = 1.0
    for k in range(m):
        head += pochhammer * math.factorial(m - k - 1) / math.factorial(k) * special.rgamma(c - a - k) * z ** (-k)
        pochhammer *= a + k
    head *= special.rgamma(a + m)

    coefficient = z ** (-m) / math.factorial(m)
    tail = 0.0
    term = math.inf
    small_terms = 0
    for k in range(max_terms):
        shifted = c - a - k - m
        bracket = (log_x + special.psi(k + 1.0) + special.psi(k + m + 1.0) - special.psi(a + k + m)) * \
            special.rgamma(shifted) - _psi_over_gamma(shifted)
        term = coefficient * bracket
        tail += term

        if not np.isfinite(tail):
            break
        small_terms = small_terms + 1 if abs(term) <= tolerance * abs(tail) else 0
        if small_terms >= 2:
            return float(special.gamma(c) * x ** (-a) * (head + special.rgamma(a) * tail))

        coefficient *= (a + m + k) / ((k + 1.0) * (k + m + 1.0) * x)

    raise ConvergenceException('2F1({}, {}; {}; {}) logarithmic series not converged'.format(a, a + m, c, z),
                               'Argument too close to -1 for the inverse expansion',
                               error_estimate=abs(term))


def _series(a: float, b: float, c: float, z: float, tolerance: float, max_terms: int) -> float:
    """
    Sums the hypergeometric series in vectorised blocks of term ratios.

    The tail after the current block is bounded by |t| rho / (1 - rho) with rho the
    larger of the last term ratio and |z|, which the ratios approach from either side.
    """
    if z == 0:
        return 1.0

    total = 1.0
    term = 1.0
    n = 0
    while n < max_terms:
        k = np.arange(n, n + _BLOCK, dtype=float)
        ratios = (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        terms = term * np.cumprod(ratios)
        total += float(np.sum(terms))
        term = float(terms[-1])
        n += _BLOCK

        if term == 0.0:
            return total

        if not np.isfinite(total):
            break

        rho = max(abs(float(ratios[-1])), abs(z))
        if rho < 1 and abs(term) * rho / (1.0 - rho) <= tolerance * abs(total):
            return total

    core_logger.debug('2F1 series stopped at {} terms (a={}, b={}, c={}, z={})'.format(n, a, b, c, z))
    raise ConvergenceException('2F1({}, {}; {}; {}) series not converged after {} terms'.format(a, b, c, z, n),
                               'Argument too close to the unit circle for direct summation',
                               error_estimate=abs(term))
