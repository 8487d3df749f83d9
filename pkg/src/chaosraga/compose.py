"""Random, non-adaptive search for a close relative of two parent strings.

A pool of candidates is generated from a seed alone, each candidate is scored
by the sum of its correlations with the two parents, and the best one wins
(ties go to the lowest candidate index).

Candidate streams
-----------------
Candidates are produced in fixed chunks of :data:`CHUNK_SIZE`. Chunk ``c`` owns
an independent PCG64 generator seeded with ``SeedSequence([seed, c])``;
candidate ``i`` lives in chunk ``i // CHUNK_SIZE`` at row ``i % CHUNK_SIZE`` and
consumes a fixed number of doubles from that stream:

* ``logistic``: 2 doubles ``(u, v)``. ``lambda = lo + (hi - lo) * u`` and
  ``x0 = v`` (``v == 0`` is replaced by 0.5). The orbit is quantized with the
  raga's bins.
* ``uniform``: ``length`` doubles, level ``floor(u * n_levels)`` each.
* ``exhaustive``: no draws; candidate ``i`` is ``i`` written in base
  ``n_levels`` with ``length`` digits, most significant first.

Draws are taken row-major, so the first ``k`` candidates of a pool do not
depend on the pool size. Chunks are scored independently and reduced by
(max score, min index), which makes the result independent of the number of
worker threads.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .chaos import LogisticParams, iterate_batch
from .correlate import correlation, energy
from .errors import DomainError
from .raga import (
    LevelSequence,
    NoteString,
    RagaSpec,
    amplitude_table,
    decode_amplitudes,
    quantize_array,
    same_raga,
)

CHUNK_SIZE = 2048
MODES = ("logistic", "uniform", "exhaustive")
DEFAULT_POOL = 150_000
DEFAULT_LAMBDA_RANGE = (3.6, 4.0)


@dataclass(frozen=True)
class SearchConfig:
    raga: RagaSpec
    length: int
    pool_size: int = DEFAULT_POOL
    mode: str = "logistic"
    lambda_range: tuple = DEFAULT_LAMBDA_RANGE
    seed: int = 0

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.pool_size < 1:
            raise DomainError("pool_size must be >= 1")
        if self.length < 1:
            raise DomainError("length must be >= 1")
        lo, hi = self.lambda_range
        if not (0.0 < lo <= hi <= 4.0):
            raise DomainError(f"lambda_range must lie in (0,4], got {self.lambda_range!r}")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")
        if self.mode == "exhaustive" and self.pool_size > self.raga.n_levels ** self.length:
            raise DomainError(
                f"exhaustive pool of {self.pool_size} exceeds the "
                f"{self.raga.n_levels ** self.length} distinct sequences"
            )


@dataclass(frozen=True)
class CompositionResult:
    best: NoteString
    score: float
    c1: float
    c2: float
    candidate_index: int
    generator_params: Optional[LogisticParams]
    seed: int

    def to_dict(self):
        gp = self.generator_params
        return {
            "best": self.best.symbols,
            "score": self.score,
            "c1": self.c1,
            "c2": self.c2,
            "candidate_index": self.candidate_index,
            "generator_params": None if gp is None else {"lambda": gp.lam, "x0": gp.x0},
            "seed": self.seed,
        }


def _chunk_rng(seed, chunk):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, chunk])))


def _logistic_params(cfg, u):
    lo, hi = cfg.lambda_range
    lams = lo + (hi - lo) * u[:, 0]
    x0s = np.where(u[:, 1] == 0.0, 0.5, u[:, 1])
    return lams, x0s


def chunk_candidates(cfg, chunk, rows=None):
    """Levels for the first ``rows`` candidates of ``chunk``.

    Returns ``(levels, lams, x0s)``; ``levels`` has shape ``(rows, length)``
    and the parameter arrays are ``None`` outside logistic mode.
    """
    if rows is None:
        rows = CHUNK_SIZE
    n = cfg.raga.n_levels
    if cfg.mode == "exhaustive":
        idx = np.arange(chunk * CHUNK_SIZE, chunk * CHUNK_SIZE + rows, dtype=np.int64)
        powers = n ** np.arange(cfg.length - 1, -1, -1, dtype=np.int64)
        return (idx[:, None] // powers[None, :]) % n, None, None
    rng = _chunk_rng(cfg.seed, chunk)
    if cfg.mode == "uniform":
        u = rng.random((rows, cfg.length))
        return quantize_array(u, n), None, None
    u = rng.random((rows, 2))
    lams, x0s = _logistic_params(cfg, u)
    orbits = iterate_batch(lams, x0s, cfg.length)
    return quantize_array(orbits, n), lams, x0s


def generate_candidate(cfg, index):
    """Candidate ``index`` of the pool described by ``cfg``.

    Returns ``(LevelSequence, LogisticParams or None)``. The value depends only
    on ``cfg`` and ``index``, never on any parent.
    """
    chunk, row = divmod(index, CHUNK_SIZE)
    levels, lams, x0s = chunk_candidates(cfg, chunk, rows=row + 1)
    params = None
    if lams is not None:
        params = LogisticParams(float(lams[row]), float(x0s[row]), cfg.length)
    return LevelSequence(cfg.raga, tuple(levels[row].tolist())), params


def score(candidate, p1, p2):
    same_raga(candidate, p1, p2)
    x = decode_amplitudes(candidate)
    return correlation(x, decode_amplitudes(p1)) + correlation(x, decode_amplitudes(p2))


def score_levels(levels, table, p1, p2):
    """Score many candidates at once.

    Accumulates sums in the same order as :func:`chaosraga.correlate.correlation`
    so each row's ``(c1, c2)`` is bit-identical to the scalar path.
    """
    cols = table[np.ascontiguousarray(levels.T)]
    rows = cols.shape[1]
    e = np.zeros(rows)
    d1 = np.zeros(rows)
    d2 = np.zeros(rows)
    for n in range(cols.shape[0]):
        col = cols[n]
        e += col * col
        d1 += col * p1[n]
        d2 += col * p2[n]
    c1 = d1 / np.sqrt(e * energy(p1))
    c2 = d2 / np.sqrt(e * energy(p2))
    return c1, c2


def _best_in_chunk(cfg, chunk, p1, p2, table):
    start = chunk * CHUNK_SIZE
    rows = min(CHUNK_SIZE, cfg.pool_size - start)
    levels, _, _ = chunk_candidates(cfg, chunk, rows)
    c1, c2 = score_levels(levels, table, p1, p2)
    total = c1 + c2
    k = int(np.argmax(total))
    return float(total[k]), start + k, float(c1[k]), float(c2[k])


def search(p1, p2, cfg, threads=1, progress=None):
    """Return the pool candidate with the largest summed correlation."""
    same_raga(p1, p2)
    if cfg.raga != p1.raga:
        raise DomainError(f"config raga {cfg.raga.name!r} differs from parents' {p1.raga.name!r}")
    if cfg.length != len(p1):
        raise DomainError(f"config length {cfg.length} differs from parents' {len(p1)}")

    a1 = decode_amplitudes(p1)
    a2 = decode_amplitudes(p2)
    table = amplitude_table(cfg.raga)
    n_chunks = math.ceil(cfg.pool_size / CHUNK_SIZE)

    def work(chunk):
        return _best_in_chunk(cfg, chunk, a1, a2, table)

    best = None
    done = 0
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        for res in pool.map(work, range(n_chunks)):
            # chunks arrive in index order, so strict > keeps the lowest index on ties
            if best is None or res[0] > best[0]:
                best = res
            done += 1
            if progress is not None:
                progress(min(done * CHUNK_SIZE, cfg.pool_size), cfg.pool_size)

    total, index, c1, c2 = best
    levels, params = generate_candidate(cfg, index)
    return CompositionResult(
        best=levels.to_notes(),
        score=c1 + c2,
        c1=c1,
        c2=c2,
        candidate_index=index,
        generator_params=params,
        seed=cfg.seed,
    )
