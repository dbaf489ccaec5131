"""Sequence loading (plain text / FASTA) and seeded random generation."""
import enum
import string
from pathlib import Path

import numpy as np

from .core import as_sequence, check_dna
from .errors import FastaFormatError

GENERATOR_NAME = "splitmix64"
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MASK64 = (1 << 64) - 1
_WHITESPACE = string.whitespace.encode("ascii")


class InputFormat(enum.Enum):
    PLAIN = "plain"
    FASTA = "fasta"


def infer_format(path):
    suffix = Path(path).suffix.lower()
    return InputFormat.FASTA if suffix in (".fa", ".fasta") else InputFormat.PLAIN


def _clean(data):
    return data.translate(None, _WHITESPACE).upper()


def parse_fasta(data):
    """Sequence of the first record, whitespace removed and uppercased."""
    if isinstance(data, str):
        data = data.encode("ascii")
    chunks = []
    seen_header = False
    for line in data.splitlines():
        if line.startswith(b">"):
            if seen_header:
                break
            seen_header = True
        elif line.strip():
            if not seen_header:
                raise FastaFormatError("sequence data before the first '>' header")
            chunks.append(line)
    if not seen_header:
        raise FastaFormatError("no '>' header found")
    return _clean(b"".join(chunks))


def load_sequence(path, fmt=None, validate_dna=False):
    path = Path(path)
    fmt = infer_format(path) if fmt is None else InputFormat(fmt)
    data = path.read_bytes()
    seq = parse_fasta(data) if fmt is InputFormat.FASTA else _clean(data)
    if validate_dna:
        check_dna(seq)
    return seq


def write_sequence(path, seq):
    Path(path).write_bytes(as_sequence(seq))


def splitmix64(seed, count):
    """First ``count`` outputs of SplitMix64 started from ``seed`` (uint64 array)."""
    state = np.uint64(seed & _MASK64)
    with np.errstate(over="ignore"):
        z = state + _GOLDEN * np.arange(1, count + 1, dtype=np.uint64)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


def generate_random(length, alphabet=b"ACGT", seed=0):
    """Symbol k is ``alphabet[splitmix64(seed)[k] % len(alphabet)]``."""
    alphabet = as_sequence(alphabet)
    if not alphabet:
        raise ValueError("alphabet must be non-empty")
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    picks = splitmix64(seed, length) % np.uint64(len(alphabet))
    return np.frombuffer(alphabet, dtype=np.uint8)[picks.astype(np.intp)].tobytes()
