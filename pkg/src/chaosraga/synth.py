"""Sine-tone rendering of note strings to 16-bit mono PCM."""

import io
import wave

import numpy as np

from .errors import DomainError

SAMPLE_RATE = 44100
DEFAULT_SA_HZ = 240.0
DEFAULT_DURATION = 0.2
FADE = 0.005
AMPLITUDE = 0.6

# Semitones above Sa; None is a rest.
PITCH_MAPS = {
    "bhairabi": {"S": 0, "r": 1, "g": 3, "M": 5, "P": 7, "d": 8, "n": 10, "C": 12, "B": None},
    "bhupali": {"S": 0, "R": 2, "G": 4, "P": 7, "D": 9, "C": 12, "B": None},
}


def pitch_map(raga):
    try:
        return PITCH_MAPS[raga.name.lower()]
    except KeyError:
        raise DomainError(f"no pitch map for raga {raga.name!r}") from None


def frequency(symbol, raga, sa_hz=DEFAULT_SA_HZ):
    semis = pitch_map(raga)[symbol]
    if semis is None:
        return None
    return sa_hz * 2.0 ** (semis / 12.0)


def tone(freq, duration=DEFAULT_DURATION, rate=SAMPLE_RATE):
    n = int(round(duration * rate))
    if freq is None:
        return np.zeros(n)
    t = np.arange(n) / rate
    wave_ = AMPLITUDE * np.sin(2.0 * np.pi * freq * t)
    fade = min(int(round(FADE * rate)), n // 2)
    if fade:
        ramp = np.arange(fade) / fade
        wave_[:fade] *= ramp
        wave_[n - fade:] *= ramp[::-1]
    return wave_


def render(notes, sa_hz=DEFAULT_SA_HZ, duration=DEFAULT_DURATION, rate=SAMPLE_RATE):
    """Float samples in [-1, 1], one fixed-length tone per symbol."""
    pitch_map(notes.raga)
    parts = [tone(frequency(s, notes.raga, sa_hz), duration, rate) for s in str(notes)]
    return np.concatenate(parts) if parts else np.zeros(0)


def wav_bytes(samples, rate=SAMPLE_RATE):
    pcm = np.clip(np.round(samples * 32767.0), -32768, 32767).astype("<i2")
    buf = io.BytesIO()
    with wave.open(buf, "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(rate)
        w.writeframes(pcm.tobytes())
    return buf.getvalue()
