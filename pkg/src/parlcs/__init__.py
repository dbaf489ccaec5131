"""Longest common subsequence with a blocked anti-diagonal wavefront fill.

The hot loop lives in a compiled extension (``parlcs._kernels``); a
pure-Python copy is used when it is missing. ``parlcs.BACKEND`` names the
one selected at import.
"""
from . import _backend
from .core import (
    Arrow,
    LcsResult,
    as_sequence,
    brute_force_lcs,
    is_subsequence,
    lcs_cell,
    lcs_fill_serial,
    lcs_length,
    similarity_percent,
    traceback,
)
from .errors import (
    AlphabetError,
    CapacityError,
    ConfigError,
    EquivalenceError,
    FastaFormatError,
    LcsError,
    ScheduleError,
)
from .parallel import (
    BlockGrid,
    ParallelConfig,
    compute_block,
    compute_lcs,
    lcs_fill_parallel,
    partition_blocks,
    wavefront_schedule,
)
from .seqio import InputFormat, generate_random, load_sequence, parse_fasta

BACKEND = _backend.name
