import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from chaosraga.chaos import LogisticParams, iterate
from chaosraga.errors import DomainError, IllegalSymbolError, UnknownRagaError
from chaosraga.raga import (
    BHAIRABI,
    BHUPALI,
    LevelSequence,
    RagaSpec,
    builtin_raga,
    decode_amplitudes,
    encode,
    load_raga_file,
    parse_notes,
    quantize,
    quantize_array,
    register_raga,
    registered_ragas,
    render_notes,
)


def test_builtins():
    b = builtin_raga("bhairabi")
    assert b.n_levels == 9 and b.alphabet[4] == "P"
    assert "".join(b.alphabet) == "SrgMPdnCB"
    p = builtin_raga("bhupali")
    assert p.n_levels == 7 and p.alphabet[6] == "B"
    with pytest.raises(UnknownRagaError):
        builtin_raga("ragamalika")


def test_bin_edges_exact():
    assert BHUPALI.bin_edges() == [k / 7 for k in range(8)]


def test_raga_spec_validation():
    with pytest.raises(DomainError):
        RagaSpec("x", ("A",))
    with pytest.raises(DomainError):
        RagaSpec("x", ("A", "A"))
    with pytest.raises(DomainError):
        RagaSpec("x", ("A", "BC"))


@pytest.mark.parametrize(
    "value,raga,level",
    [(0.05, BHAIRABI, 0), (0.5, BHAIRABI, 4), (1 / 7, BHUPALI, 1), (1.0, BHUPALI, 6), (0.0, BHUPALI, 0)],
)
def test_quantize(value, raga, level):
    assert quantize(value, raga) == level


@pytest.mark.parametrize("value", [-0.01, 1.0000001, math.nan])
def test_quantize_domain(value):
    with pytest.raises(DomainError):
        quantize(value, BHUPALI)


def test_quantize_partition_random():
    rng = np.random.default_rng(0)
    vals = rng.random(1_000_000)
    for raga in (BHAIRABI, BHUPALI):
        n = raga.n_levels
        expected = np.floor(vals * n).astype(int)
        assert np.array_equal(quantize_array(vals, n), expected)
        assert np.all(np.diff(quantize_array(np.sort(vals), n)) >= 0)
    for v in vals[:2000]:
        assert quantize(float(v), BHAIRABI) == math.floor(v * 9)


def test_encode_paper_prefixes():
    s1 = encode(iterate(LogisticParams(3.99, 0.1, 12)), BHUPALI)
    assert str(s1) == "SGBGCPBSRPBS"
    s2 = encode(iterate(LogisticParams(3.95, 0.3, 6)), BHUPALI)
    assert str(s2) == "GCPBSG"
    assert str(encode([0.5, 0.5], BHAIRABI)) == "PP"


def test_decode_amplitudes():
    assert decode_amplitudes(LevelSequence(BHUPALI, [0])) == [1 / 14]
    assert decode_amplitudes(LevelSequence(BHAIRABI, [8])) == [17 / 18]


def test_parse_notes():
    assert parse_notes("SGB G", BHUPALI).levels == (0, 2, 6, 2)
    assert parse_notes("# comment\nSS", BHUPALI).levels == (0, 0)
    with pytest.raises(IllegalSymbolError) as exc:
        parse_notes("SXZ", BHUPALI)
    assert exc.value.position == 2 and exc.value.symbol == "X"
    assert "position 2" in str(exc.value)


def test_parse_notes_position_multiline():
    with pytest.raises(IllegalSymbolError) as exc:
        parse_notes("# c\nSS\n S x", BHUPALI)
    err = exc.value
    assert (err.line, err.column, err.position) == (3, 4, 11)


def test_parse_is_case_sensitive():
    assert parse_notes("r", BHAIRABI).levels == (1,)
    with pytest.raises(IllegalSymbolError):
        parse_notes("R", BHAIRABI)


def test_level_sequence_validation():
    with pytest.raises(DomainError):
        LevelSequence(BHUPALI, [])
    with pytest.raises(DomainError):
        LevelSequence(BHUPALI, [7])


level_seqs = st.sampled_from([BHAIRABI, BHUPALI]).flatmap(
    lambda r: st.lists(st.integers(0, r.n_levels - 1), min_size=1, max_size=300).map(
        lambda lv: LevelSequence(r, lv)
    )
)


@given(level_seqs)
def test_round_trips(ls):
    notes = ls.to_notes()
    assert parse_notes(render_notes(notes, width=13), ls.raga) == ls
    assert encode(decode_amplitudes(ls), ls.raga) == notes
    assert notes.to_levels() == ls
    assert all(a > 0 for a in decode_amplitudes(ls))


@given(st.lists(st.floats(0, 1), min_size=1, max_size=100))
def test_encode_preserves_length(vals):
    assert len(encode(vals, BHAIRABI)) == len(vals)


def test_custom_raga_file(tmp_path):
    path = tmp_path / "yaman.raga"
    path.write_text("yaman\nSRGmPDNC\n", encoding="utf-8")
    spec = load_raga_file(path)
    assert spec.n_levels == 8 and spec.alphabet[3] == "m"
    register_raga(spec)
    assert builtin_raga("yaman") is spec
    assert [r.name for r in registered_ragas()] == ["bhairabi", "bhupali", "yaman"]


def test_custom_raga_conflict():
    with pytest.raises(DomainError):
        register_raga(RagaSpec("bhupali", ("a", "b")))
