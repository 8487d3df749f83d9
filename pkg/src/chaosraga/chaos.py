"""Logistic map orbits.

The scalar path (:func:`step`, :func:`iterate`) is the reference. The batch
path evaluates the same expression, in the same operation order, across many
orbits at once, so its output is bit-identical to the scalar path.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class LogisticParams:
    lam: float
    x0: float
    length: int

    def __post_init__(self):
        check_lambda(self.lam)
        if not 0.0 < self.x0 < 1.0:
            raise DomainError(f"x0 must be in (0,1), got {self.x0!r}")
        if int(self.length) != self.length or self.length < 1:
            raise DomainError(f"length must be a positive integer, got {self.length!r}")


def check_lambda(lam):
    if not 0.0 < lam <= 4.0:
        raise DomainError(f"lambda must be in (0,4], got {lam!r}")


def step(lam, x):
    """One application of the map, ``lam * x * (1 - x)``."""
    check_lambda(lam)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must be in [0,1], got {x!r}")
    return lam * x * (1.0 - x)


def iterate(params):
    """Return ``params.length`` samples of the orbit, starting with ``x0``.

    With ``lam == 4`` an orbit may land on exactly 0 and stay there; the
    values remain inside [0, 1] and quantize normally.
    """
    lam = float(params.lam)
    x = float(params.x0)
    out = [x]
    for _ in range(params.length - 1):
        x = lam * x * (1.0 - x)
        out.append(x)
    return out


def iterate_batch(lams, x0s, length):
    """Orbits for many parameter pairs at once, shape ``(len(lams), length)``.

    Row ``i`` equals ``iterate(LogisticParams(lams[i], x0s[i], length))``
    exactly. Parameters are assumed valid.
    """
    lams = np.asarray(lams, dtype=np.float64)
    x = np.array(x0s, dtype=np.float64)
    out = np.empty((x.shape[0], length), dtype=np.float64)
    out[:, 0] = x
    for n in range(1, length):
        x = lams * x * (1.0 - x)
        out[:, n] = x
    return out
