"""Notes files and report documents."""

import json
import math
import os
import re
import tempfile

from . import __version__
from .errors import DomainError
from .raga import builtin_raga, parse_notes, render_notes

SCHEMA_VERSION = 1

_HEADER = re.compile(r"^\s*#\s*([A-Za-z0-9_]+)\s*:\s*(.*?)\s*$")


def atomic_write(path, data):
    """Write ``data`` (str or bytes) to ``path`` via a temp file and rename."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data.encode("utf-8") if isinstance(data, str) else data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_headers(text):
    headers = {}
    for line in text.splitlines():
        m = _HEADER.match(line)
        if m:
            headers.setdefault(m.group(1).lower(), m.group(2))
    return headers


def format_notes_file(notes, **meta):
    lines = [f"# raga: {notes.raga.name}"]
    for key, value in meta.items():
        if value is not None:
            lines.append(f"# {key}: {value!r}" if isinstance(value, float) else f"# {key}: {value}")
    return "\n".join(lines) + "\n" + render_notes(notes)


def write_notes_file(path, notes, **meta):
    atomic_write(path, format_notes_file(notes, **meta))


def read_notes_text(text, raga=None):
    """Parse notes-file text. Returns ``(LevelSequence, headers)``.

    The ``# raga:`` header wins over ``raga``; one of the two is required.
    """
    headers = read_headers(text)
    name = headers.get("raga")
    if name is not None:
        spec = builtin_raga(name)
    elif raga is not None:
        spec = builtin_raga(raga)
    else:
        raise DomainError("notes file has no '# raga: <name>' header and no raga was given")
    return parse_notes(text, spec), headers


def read_notes_file(path, raga=None):
    with open(path, encoding="utf-8") as fh:
        return read_notes_text(fh.read(), raga)


def _finite_or_none(value):
    if value is None:
        return None
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"non-finite value in report: {value!r}")
    return value


def build_report(levels, *, lam=None, x0=None, correlations=None, fractal=None,
                 seed=None, pool_size=None, mode=None, candidate_index=None):
    corr = None
    if correlations is not None:
        corr = {k: _finite_or_none(correlations[k]) for k in ("c1", "c2", "score")}
    frac = None
    if fractal is not None:
        frac = {
            "dimension": _finite_or_none(fractal.dimension),
            "scales": [[_finite_or_none(s), int(c)] for s, c in fractal.scales],
            "fit_r2": _finite_or_none(fractal.fit_r2),
        }
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "raga": levels.raga.name,
        "length": len(levels),
        "lambda": _finite_or_none(lam),
        "x0": _finite_or_none(x0),
        "correlations": corr,
        "fractal": frac,
        "seed": seed,
        "pool_size": pool_size,
        "mode": mode,
        "candidate_index": candidate_index,
    }


def dumps_report(report):
    return json.dumps(report, indent=2, sort_keys=True, allow_nan=False) + "\n"
