import numpy as np
from scipy import special

from alphalomax.src.core.exceptions.DomainException import DomainException

EULER_GAMMA = 0.57721566490153286061


def _is_pole(z: np.ndarray) -> np.ndarray:
    return (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))


def log_gamma_complex(z):
    """
    Principal branch of log Γ(z) for complex (or real) z.

    Accepts scalars or arrays; arrays are evaluated element-wise, which is how the
    Mellin-Barnes integrand uses it.

    :raise DomainException: z hits a pole (non-positive integer)
    """
    values = np.asarray(z, dtype=complex)
    poles = _is_pole(values)
    if np.any(poles):
        location = values[poles].flat[0]
        raise DomainException('Gamma function pole at z={}'.format(location.real),
                              'Non-positive integers are not in the domain of log-gamma')

    result = special.loggamma(values)
    if np.ndim(z) == 0:
        return complex(result)
    return result


def digamma(x: float) -> float:
    """
    :raise DomainException: x <= 0
    """
    if not x > 0:
        raise DomainException('Digamma evaluated at x={}'.format(x), 'Only x > 0 is supported')

    return float(special.psi(x))
