"""Raga alphabets, uniform quantization and the note-string formats.

A raga with ``n`` symbols splits [0, 1] into ``n`` equal bins. Bin ``k`` is
``[k/n, (k+1)/n)``; the value 1.0 is assigned to the top bin.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, IllegalSymbolError, MismatchError, UnknownRagaError


@dataclass(frozen=True)
class RagaSpec:
    name: str
    alphabet: tuple

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        if len(self.alphabet) < 2:
            raise DomainError(f"raga {self.name!r} needs at least 2 symbols")
        for sym in self.alphabet:
            if len(sym) != 1 or sym.isspace() or sym == "#":
                raise DomainError(f"raga {self.name!r}: invalid symbol {sym!r}")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise DomainError(f"raga {self.name!r}: duplicate symbols")

    @property
    def n_levels(self):
        return len(self.alphabet)

    def index(self, symbol):
        return self.alphabet.index(symbol)

    def bin_edges(self):
        n = self.n_levels
        return [k / n for k in range(n + 1)]


BHAIRABI = RagaSpec("bhairabi", ("S", "r", "g", "M", "P", "d", "n", "C", "B"))
BHUPALI = RagaSpec("bhupali", ("S", "R", "G", "P", "D", "C", "B"))

_BUILTINS = {r.name: r for r in (BHAIRABI, BHUPALI)}
_registry = dict(_BUILTINS)


def builtin_raga(name):
    """Look up a registered raga by name (case-insensitive)."""
    if isinstance(name, RagaSpec):
        return name
    try:
        return _registry[name.lower()]
    except KeyError:
        raise UnknownRagaError(name) from None


def register_raga(spec):
    key = spec.name.lower()
    existing = _registry.get(key)
    if existing is not None and existing != spec:
        raise DomainError(f"raga {spec.name!r} is already registered with a different alphabet")
    _registry[key] = spec
    return spec


def reset_registry():
    """Drop user-registered ragas, keeping the built-ins."""
    _registry.clear()
    _registry.update(_BUILTINS)


def registered_ragas():
    return [_registry[k] for k in sorted(_registry)]


def load_raga_file(path):
    """Read a raga definition: line 1 the name, line 2 the alphabet in bin order."""
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh.read().splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) < 2:
        raise DomainError(f"{path}: raga file needs a name line and an alphabet line")
    name, alphabet = lines[0], lines[1]
    if any(ch.isspace() for ch in alphabet):
        raise DomainError(f"{path}: alphabet must be contiguous characters")
    return RagaSpec(name, tuple(alphabet))


@dataclass(frozen=True)
class LevelSequence:
    raga: RagaSpec
    levels: tuple

    def __post_init__(self):
        levels = tuple(int(v) for v in self.levels)
        if not levels:
            raise DomainError("level sequence must be non-empty")
        n = self.raga.n_levels
        for v in levels:
            if not 0 <= v < n:
                raise DomainError(f"level {v} outside [0, {n - 1}] for raga {self.raga.name!r}")
        object.__setattr__(self, "levels", levels)

    def __len__(self):
        return len(self.levels)

    def to_notes(self):
        alphabet = self.raga.alphabet
        return NoteString(self.raga, "".join(alphabet[v] for v in self.levels))


@dataclass(frozen=True)
class NoteString:
    raga: RagaSpec
    symbols: str

    def __post_init__(self):
        allowed = set(self.raga.alphabet)
        for i, ch in enumerate(self.symbols):
            if ch not in allowed:
                raise IllegalSymbolError(ch, i + 1, 1, i + 1, self.raga.name)

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return self.symbols

    def to_levels(self):
        index = {s: k for k, s in enumerate(self.raga.alphabet)}
        return LevelSequence(self.raga, tuple(index[ch] for ch in self.symbols))


def quantize(value, raga):
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"value must be in [0,1], got {value!r}")
    n = raga.n_levels
    return min(math.floor(value * n), n - 1)


def quantize_array(values, n_levels):
    """Vectorized :func:`quantize` for values already known to lie in [0, 1]."""
    levels = np.floor(np.asarray(values) * n_levels).astype(np.int64)
    np.minimum(levels, n_levels - 1, out=levels)
    return levels


def encode(seq, raga):
    alphabet = raga.alphabet
    return NoteString(raga, "".join(alphabet[quantize(v, raga)] for v in seq))


def amplitude_table(raga):
    """Bin midpoints ``(2k+1) / (2n)`` indexed by level."""
    n = raga.n_levels
    return np.array([(2 * k + 1) / (2 * n) for k in range(n)], dtype=np.float64)


def decode_amplitudes(ls):
    n = ls.raga.n_levels
    return [(2 * k + 1) / (2 * n) for k in ls.levels]


def parse_notes(text, raga):
    """Parse note text into levels.

    Whitespace is ignored and any line whose first non-blank character is
    ``#`` is skipped. Symbols are matched case-sensitively.
    """
    index = {s: k for k, s in enumerate(raga.alphabet)}
    levels = []
    offset = 0
    for lineno, line in enumerate(text.splitlines(keepends=True), start=1):
        if line.lstrip().startswith("#"):
            offset += len(line)
            continue
        for col, ch in enumerate(line, start=1):
            if ch.isspace():
                continue
            try:
                levels.append(index[ch])
            except KeyError:
                raise IllegalSymbolError(ch, offset + col, lineno, col, raga.name) from None
        offset += len(line)
    if not levels:
        raise DomainError("no note symbols found")
    return LevelSequence(raga, tuple(levels))


def render_notes(notes, width=70):
    """Lay a note string out over lines of at most ``width`` symbols."""
    s = str(notes)
    return "\n".join(s[i:i + width] for i in range(0, len(s), width)) + "\n"


def same_raga(*seqs):
    first = seqs[0]
    for other in seqs[1:]:
        if other.raga != first.raga:
            raise MismatchError(
                f"raga mismatch: {first.raga.name!r} vs {other.raga.name!r}"
            )
        if len(other) != len(first):
            raise MismatchError(f"length mismatch: {len(first)} vs {len(other)}")
