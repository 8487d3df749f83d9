"""Independent reference computations used by the tests.

Nothing here imports the scoring or counting code it is checked against.
"""

import itertools
import math


def midpoints(levels, n_levels):
    return [(2 * k + 1) / (2 * n_levels) for k in levels]


def cosine(x, y):
    num = sum(a * b for a, b in zip(x, y))
    return num / math.sqrt(sum(a * a for a in x) * sum(b * b for b in y))


def brute_force_best(p1, p2, n_levels):
    """Exhaustive argmax of summed cosine over all level tuples, lowest index on ties.

    Returns ``(index, levels, score)`` with ``index`` the position in
    lexicographic (itertools.product) order.
    """
    a1 = midpoints(p1, n_levels)
    a2 = midpoints(p2, n_levels)
    best = None
    for idx, cand in enumerate(itertools.product(range(n_levels), repeat=len(p1))):
        x = midpoints(cand, n_levels)
        s = cosine(x, a1) + cosine(x, a2)
        if best is None or s > best[2]:
            best = (idx, cand, s)
    return best


def sampled_box_count(points, m, samples_per_segment=4000):
    """Box count by dense point sampling along each segment."""
    n = 2 ** m

    def cell(v):
        k = math.floor(v * n)
        return n - 1 if k == n else k

    cells = set()
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        for i in range(samples_per_segment + 1):
            t = i / samples_per_segment
            cells.add((cell(x0 + t * (x1 - x0)), cell(y0 + t * (y1 - y0))))
    return len(cells)
