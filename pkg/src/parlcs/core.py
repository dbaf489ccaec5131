"""Serial LCS: table fill, traceback, brute-force oracle, similarity.

Sequences are ``bytes`` (one symbol per byte); ``str`` input is accepted
and ASCII-encoded. Tables are numpy arrays:

* length table ``c``: shape (M+1, N+1), uint32, row 0 and column 0 zero;
  ``c[i, j]`` is the LCS length of ``X[:i]`` and ``Y[:j]``.
* arrow table ``b``: shape (M, N), uint8; the arrow for 1-based cell
  (i, j) lives at ``b[i-1, j-1]``.
"""
from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations

import numpy as np

from . import _backend
from .errors import AlphabetError, CapacityError

DNA = b"ACGT"
DEFAULT_MEMORY_BUDGET = 2 * 1024**3
BRUTE_FORCE_LIMIT = 20


class Arrow(IntEnum):
    DIAG = 1
    UP = 2
    LEFT = 3


@dataclass(frozen=True)
class LcsResult:
    length: int
    subsequence: bytes
    similarity_percent: float
    elapsed_seconds: float


def as_sequence(seq, validate_dna=False):
    """Coerce ``seq`` to bytes; optionally check every symbol is in ACGT."""
    if isinstance(seq, str):
        seq = seq.encode("ascii")
    else:
        seq = bytes(seq)
    if validate_dna:
        check_dna(seq)
    return seq


def check_dna(seq):
    bad = seq.translate(None, DNA)
    if bad:
        offset = next(k for k, s in enumerate(seq) if s not in DNA)
        raise AlphabetError(seq[offset], offset)


def table_bytes(m, n):
    return (m + 1) * (n + 1) * 4 + m * n


def allocate_tables(m, n, memory_budget=None):
    """Zeroed length and arrow tables for an m x n problem."""
    budget = DEFAULT_MEMORY_BUDGET if memory_budget is None else memory_budget
    need = table_bytes(m, n)
    if need > budget:
        raise CapacityError(f"{m}x{n} tables need {need} bytes, budget is {budget}")
    return np.zeros((m + 1, n + 1), dtype=np.uint32), np.zeros((m, n), dtype=np.uint8)


def _as_array(seq):
    return np.frombuffer(seq, dtype=np.uint8) if seq else np.zeros(0, dtype=np.uint8)


def lcs_cell(x_i, y_j, diag, up, left):
    """One step of the recurrence; ties between up and left go LEFT."""
    if x_i == y_j:
        return diag + 1, Arrow.DIAG
    if up > left:
        return up, Arrow.UP
    return left, Arrow.LEFT


def fill_serial_into(x, y, c, b):
    """Row-major fill of preallocated tables; ``x``/``y`` are uint8 arrays."""
    m, n = len(x), len(y)
    if m and n:
        _backend.active.fill_block(x, y, c, b, 1, m + 1, 1, n + 1)


def lcs_fill_serial(X, Y, *, memory_budget=None):
    """Return ``(c, b)`` for X and Y; ``c[M, N]`` is the LCS length."""
    X, Y = as_sequence(X), as_sequence(Y)
    c, b = allocate_tables(len(X), len(Y), memory_budget)
    fill_serial_into(_as_array(X), _as_array(Y), c, b)
    return c, b


def lcs_length(X, Y, *, memory_budget=None):
    c, _ = lcs_fill_serial(X, Y, memory_budget=memory_budget)
    return int(c[-1, -1])


def traceback(b, X, i, j):
    """Follow arrows from (i, j) back to the border; LCS in forward order."""
    X = as_sequence(X)
    m, n = b.shape
    if not (0 <= i <= m and 0 <= j <= n):
        raise IndexError(f"({i}, {j}) outside arrow table of shape {m}x{n}")
    if len(X) != m:
        raise ValueError(f"sequence length {len(X)} does not match table rows {m}")
    return _backend.active.trace(b, _as_array(X), i, j)[::-1]


def is_subsequence(S, X):
    it = iter(as_sequence(X))
    return all(s in it for s in as_sequence(S))


def brute_force_lcs(X, Y, limit=BRUTE_FORCE_LIMIT):
    """Exhaustive LCS length: try subsequences of the shorter input, longest first."""
    X, Y = as_sequence(X), as_sequence(Y)
    if len(X) > len(Y):
        X, Y = Y, X
    if len(X) > limit:
        raise ValueError(f"brute force oracle limited to min length {limit}, got {len(X)}")
    for k in range(len(X), 0, -1):
        for picks in combinations(X, k):
            if is_subsequence(bytes(picks), Y):
                return k
    return 0


def similarity_percent(length, m, n):
    """Share of the child (length ``n``) covered by the LCS, in percent."""
    if length < 0 or length > min(m, n):
        raise ValueError(f"LCS length {length} exceeds min({m}, {n})")
    if n == 0:
        return 100.0
    return 100.0 * length / n
