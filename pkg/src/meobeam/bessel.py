"""Order-one Bessel function of the first kind.

Power series below the crossover, Hankel asymptotic expansion above it.
Absolute accuracy is better than 1e-10 on (0, 400] (checked against an
independent implementation in the test suite).
"""

import math

_CROSSOVER = 15.0


def _j1_series(x):
    half = 0.5 * x
    q = half * half
    term = half
    total = term
    for m in range(1, 60):
        term *= -q / (m * (m + 1))
        total += term
        if abs(term) < 1e-18 * (abs(total) + 1e-30):
            break
    return total


def _j1_asymptotic(x):
    # Hankel expansion, mu = 4*nu^2 = 4.  The raw terms
    # c_k = prod_{j<=k}(mu - (2j-1)^2) / (k! (8x)^k) feed P (even k) and
    # Q (odd k) with alternating signs; truncate at the smallest term.
    mu = 4.0
    inv8x = 1.0 / (8.0 * x)
    c = 1.0
    p = 1.0
    q = 0.0
    prev = math.inf
    for k in range(1, 30):
        c *= (mu - (2 * k - 1) ** 2) / k * inv8x
        if abs(c) >= prev:  # series started diverging
            break
        prev = abs(c)
        if k % 2 == 1:
            q += c * (-1.0) ** ((k - 1) // 2)
        else:
            p += c * (-1.0) ** (k // 2)
    chi = x - 0.75 * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (p * math.cos(chi)
                                             - q * math.sin(chi))


def j1(x):
    """J1(x) for real x."""
    if x < 0:
        return -j1(-x)
    if x == 0.0:
        return 0.0
    if x <= _CROSSOVER:
        return _j1_series(x)
    return _j1_asymptotic(x)
