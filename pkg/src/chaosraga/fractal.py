"""Box-counting dimension of a string's graph.

The graph is the polyline through ``(i / (L-1), amplitude_i)`` in the unit
square. At exponent ``m`` the square is cut into a ``2**m x 2**m`` grid of
half-open cells ``[a/N, (a+1)/N) x [b/N, (b+1)/N)``, with the right and top
edges of the square belonging to the last column and row. A cell is counted
when any point of the polyline falls inside it. Counting walks each segment
column by column in exact rational arithmetic, so there is no rasterization
step and no resolution parameter.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import math

from .errors import DomainError, TooShortError
from .raga import decode_amplitudes


@dataclass(frozen=True)
class FractalConfig:
    m_min: int = 1
    m_max: int = 6

    def __post_init__(self):
        if not 1 <= self.m_min < self.m_max <= 12:
            raise DomainError(
                f"need 1 <= m_min < m_max <= 12, got m_min={self.m_min}, m_max={self.m_max}"
            )


@dataclass(frozen=True)
class FractalReport:
    dimension: float
    scales: list = field(default_factory=list)  # [(box_size, count)], coarse to fine
    fit_r2: float = 1.0

    def to_dict(self):
        return {
            "dimension": self.dimension,
            "scales": [[size, count] for size, count in self.scales],
            "fit_r2": self.fit_r2,
        }


def graph_polyline(ls):
    if len(ls) < 2:
        raise TooShortError(f"graph needs at least 2 samples, got {len(ls)}")
    last = len(ls) - 1
    return [(i / last, y) for i, y in enumerate(decode_amplitudes(ls))]


def _cell(v, n):
    """Index of the half-open cell containing ``v`` (``v == 1`` -> top cell)."""
    k = math.floor(v * n)
    if k == n and v == 1:
        return n - 1
    return k


def _cell_below(v, n):
    """Index of the cell holding points just below ``v``."""
    k = _cell(v, n)
    if v * n == k and not (v == 1 and k == n - 1):
        return k - 1
    return k


def _segment_cells(p, q, n, out):
    (xa, ya), (xb, yb) = p, q
    if xb < xa:
        xa, ya, xb, yb = xb, yb, xa, ya
    col_a, col_b = _cell(xa, n), _cell(xb, n)
    if col_a == col_b:
        lo, hi = sorted((ya, yb))
        col = col_a
        for row in range(_cell(lo, n), _cell(hi, n) + 1):
            out.add((col, row))
        return
    # xa < xb from here; slope is finite.
    slope = (yb - ya) / (xb - xa)
    for col in range(col_a, col_b + 1):
        x_lo = max(xa, Fraction(col, n))
        y_lo = ya + slope * (x_lo - xa)
        if col < col_b:
            # right end x = (col+1)/n belongs to the next column: open
            x_hi = Fraction(col + 1, n)
            y_hi = ya + slope * (x_hi - xa)
            if y_hi > y_lo:
                rows = range(_cell(y_lo, n), _cell_below(y_hi, n) + 1)
            elif y_hi < y_lo:
                rows = range(_cell(y_hi, n), _cell(y_lo, n) + 1)
            else:
                rows = (_cell(y_lo, n),)
        else:
            y_hi = yb
            lo, hi = sorted((y_lo, y_hi))
            rows = range(_cell(lo, n), _cell(hi, n) + 1)
        for row in rows:
            out.add((col, row))


def box_count(points, m):
    """Number of grid cells at exponent ``m`` touched by the polyline."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    n = 2 ** m
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    cells = set()
    if len(pts) == 1:
        cells.add((_cell(pts[0][0], n), _cell(pts[0][1], n)))
    for p, q in zip(pts, pts[1:]):
        _segment_cells(p, q, n, cells)
    return len(cells)


def fit_slope(xs, ys):
    """Least-squares slope of ``ys`` on ``xs`` and its coefficient of determination."""
    k = len(xs)
    mx = sum(xs) / k
    my = sum(ys) / k
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    syy = sum((y - my) ** 2 for y in ys)
    slope = sxy / sxx
    if syy == 0.0:
        return slope, 1.0
    resid = sum((y - my - slope * (x - mx)) ** 2 for x, y in zip(xs, ys))
    return slope, max(0.0, 1.0 - resid / syy)


def dimension(ls, cfg=None):
    cfg = cfg or FractalConfig()
    points = graph_polyline(ls)
    ms = list(range(cfg.m_min, cfg.m_max + 1))
    counts = [box_count(points, m) for m in ms]
    slope, r2 = fit_slope(ms, [math.log2(c) for c in counts])
    return FractalReport(
        dimension=slope,
        scales=[(2.0 ** -m, c) for m, c in zip(ms, counts)],
        fit_r2=r2,
    )
