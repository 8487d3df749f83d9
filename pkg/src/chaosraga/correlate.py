"""Energy and the uncentered correlation coefficient.

``c = sum(x*y) / sqrt(E_x * E_y)`` with no mean subtraction, i.e. cosine
similarity. Sums accumulate sequentially in double precision; the batch
scorer in :mod:`chaosraga.compose` repeats exactly this order.
"""

import math

from .errors import MismatchError, ZeroEnergyError


def energy(x):
    total = 0.0
    for v in x:
        total += v * v
    return total


def _dot(x, y):
    total = 0.0
    for a, b in zip(x, y):
        total += a * b
    return total


def correlation(x, y):
    if len(x) != len(y):
        raise MismatchError(f"length mismatch: {len(x)} vs {len(y)}")
    ex = energy(x)
    if ex == 0.0:
        raise ZeroEnergyError("x")
    ey = energy(y)
    if ey == 0.0:
        raise ZeroEnergyError("y")
    return _dot(x, y) / math.sqrt(ex * ey)
