"""Chaotic raga strings: logistic-map generation, correlation search and box-counting."""

__version__ = "0.1.0"

from .chaos import LogisticParams, iterate, step
from .compose import CompositionResult, SearchConfig, generate_candidate, score, search
from .correlate import correlation, energy
from .fractal import FractalConfig, FractalReport, box_count, dimension, graph_polyline
from .raga import (
    BHAIRABI,
    BHUPALI,
    LevelSequence,
    NoteString,
    RagaSpec,
    builtin_raga,
    decode_amplitudes,
    encode,
    parse_notes,
    quantize,
    register_raga,
)

__all__ = [
    "BHAIRABI",
    "BHUPALI",
    "CompositionResult",
    "FractalConfig",
    "FractalReport",
    "LevelSequence",
    "LogisticParams",
    "NoteString",
    "RagaSpec",
    "SearchConfig",
    "box_count",
    "builtin_raga",
    "correlation",
    "decode_amplitudes",
    "dimension",
    "encode",
    "energy",
    "generate_candidate",
    "graph_polyline",
    "iterate",
    "parse_notes",
    "quantize",
    "register_raga",
    "score",
    "search",
    "step",
]
