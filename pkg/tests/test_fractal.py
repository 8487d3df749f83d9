import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chaosraga.chaos import LogisticParams, iterate
from chaosraga.errors import DomainError, TooShortError
from chaosraga.fractal import FractalConfig, box_count, dimension, fit_slope, graph_polyline
from chaosraga.raga import BHAIRABI, BHUPALI, LevelSequence, encode

from oracles import sampled_box_count


def test_graph_polyline():
    assert graph_polyline(LevelSequence(BHUPALI, [0, 6])) == [(0.0, 1 / 14), (1.0, 13 / 14)]
    pts = graph_polyline(LevelSequence(BHUPALI, [3] * 9))
    assert len(pts) == 9 and {y for _, y in pts} == {0.5}
    with pytest.raises(TooShortError):
        graph_polyline(LevelSequence(BHUPALI, [3]))


def test_box_count_examples():
    assert box_count([(0, 1 / 14), (1, 1 / 14)], 2) == 4
    # corner-touching cells (0,1) and (1,0) are not hit under half-open cells
    assert box_count([(0, 0), (1, 1)], 1) == 2
    assert box_count([(0, 1), (1, 0)], 1) == 3
    with pytest.raises(DomainError):
        box_count([(0, 0), (1, 1)], 0)


def test_gridline_segment_counts_upper_side():
    assert box_count([(0, 0.5), (1, 0.5)], 1) == 2
    assert box_count([(0.5, 0), (0.5, 1)], 1) == 2
    assert box_count([(0, 1), (1, 1)], 2) == 4


def test_zigzag_by_hand():
    zig = LevelSequence(BHUPALI, [0, 6] * 500)
    pts = graph_polyline(zig)
    for m in (1, 2, 3):
        assert box_count(pts, m) == 4 ** m


def test_config_validation():
    for a, b in [(0, 6), (3, 3), (2, 13)]:
        with pytest.raises(DomainError):
            FractalConfig(a, b)


def test_fit_slope():
    slope, r2 = fit_slope([1, 2, 3], [2, 4, 6])
    assert slope == pytest.approx(2) and r2 == pytest.approx(1)


def test_dimension_line_and_zigzag():
    flat = dimension(LevelSequence(BHAIRABI, [2] * 1000))
    assert flat.dimension == pytest.approx(1.0, abs=0.1)
    zig = dimension(LevelSequence(BHUPALI, [0, 6] * 500))
    assert zig.dimension == pytest.approx(2.0, abs=0.1)
    assert [s for s, _ in zig.scales] == [2.0 ** -m for m in range(1, 7)]


def test_dimension_bhupali_1_in_range():
    ls = encode(iterate(LogisticParams(3.99, 0.1, 1000)), BHUPALI).to_levels()
    rep = dimension(ls)
    assert 1.2 < rep.dimension < 2.0
    assert 0 <= rep.fit_r2 <= 1


level_seqs = st.sampled_from([BHAIRABI, BHUPALI]).flatmap(
    lambda r: st.lists(st.integers(0, r.n_levels - 1), min_size=2, max_size=400).map(
        lambda lv: LevelSequence(r, lv)
    )
)


@settings(max_examples=40, deadline=None)
@given(level_seqs)
def test_count_invariants(ls):
    rep = dimension(ls)
    counts = [c for _, c in rep.scales]
    for m, c in enumerate(counts, start=1):
        assert c <= 4 ** m
    for a, b in zip(counts, counts[1:]):
        assert a <= b <= 4 * a
    assert 0.9 <= rep.dimension <= 2.1
    assert math.isfinite(rep.dimension)


points = st.tuples(
    st.integers(1, 127).map(lambda v: v / 256), st.integers(1, 127).map(lambda v: v / 256)
)


@settings(max_examples=60, deadline=None)
@given(st.lists(points, min_size=2, max_size=8), st.integers(1, 4),
       st.sampled_from([(0.5, 0.0), (0.0, 0.5), (0.5, 0.5)]))
def test_translation_invariance(pts, m, shift):
    dx, dy = shift
    moved = [(x + dx, y + dy) for x, y in pts]
    assert box_count(pts, m) == box_count(moved, m)


def test_matches_sampling_oracle():
    rng = random.Random(2024)
    agree = 0
    trials = 300
    for _ in range(trials):
        k = rng.randint(2, 8)
        pts = [(rng.random(), rng.random()) for _ in range(k)]
        m = rng.randint(1, 4)
        if box_count(pts, m) == sampled_box_count(pts, m):
            agree += 1
    assert agree / trials >= 0.99
