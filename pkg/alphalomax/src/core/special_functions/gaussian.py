import numpy as np
from scipy.special import erfc


def q_function(x):
    """
    Gaussian tail probability Q(x) = P(N(0,1) > x), through the complementary
    error function so the far tail keeps full relative precision.
    """
    result = 0.5 * erfc(np.asarray(x, dtype=float) / np.sqrt(2.0))
    if np.ndim(x) == 0:
        return float(result)
    return result
