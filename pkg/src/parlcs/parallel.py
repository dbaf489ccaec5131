"""Blocked anti-diagonal wavefront fill.

The (M, N) cell grid is cut into square tiles of side ``block_size``. Tile
(r, c) depends on its north, west and north-west neighbours, so all tiles
with the same ``r + c`` can run together; a barrier separates waves.
"""
import os
import time
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .core import (
    LcsResult,
    _as_array,
    allocate_tables,
    as_sequence,
    similarity_percent,
    traceback,
)
from .errors import ConfigError, ScheduleError

DEFAULT_BLOCK_SIZE = 64


def hardware_concurrency():
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


@dataclass(frozen=True)
class ParallelConfig:
    workers: int = field(default_factory=hardware_concurrency)
    block_size: int = DEFAULT_BLOCK_SIZE

    def __post_init__(self):
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.block_size < 1:
            raise ConfigError(f"block_size must be >= 1, got {self.block_size}")


@dataclass(frozen=True)
class BlockGrid:
    m: int
    n: int
    block_size: int

    @property
    def block_rows(self):
        return -(-self.m // self.block_size)

    @property
    def block_cols(self):
        return -(-self.n // self.block_size)

    def __len__(self):
        return self.block_rows * self.block_cols

    def bounds(self, r, c):
        """1-based half-open ``(i0, i1, j0, j1)`` cell range of block (r, c)."""
        if not (0 <= r < self.block_rows and 0 <= c < self.block_cols):
            raise IndexError(f"block ({r}, {c}) outside {self.block_rows}x{self.block_cols} grid")
        bs = self.block_size
        return (r * bs + 1, min((r + 1) * bs, self.m) + 1,
                c * bs + 1, min((c + 1) * bs, self.n) + 1)


def partition_blocks(m, n, block_size):
    if block_size < 1:
        raise ConfigError(f"block_size must be >= 1, got {block_size}")
    return BlockGrid(m, n, block_size)


def wavefront_schedule(grid):
    """List of waves; wave ``d`` holds blocks (r, c) with r + c = d, r ascending."""
    rows, cols = grid.block_rows, grid.block_cols
    if rows == 0 or cols == 0:
        return []
    return [
        [(r, d - r) for r in range(max(0, d - cols + 1), min(d, rows - 1) + 1)]
        for d in range(rows + cols - 1)
    ]


def compute_block(block, X, Y, c, b, grid, completed=None):
    """Fill one block of ``c``/``b`` in place.

    With ``completed`` (a bool array of the grid's shape) the north, west
    and north-west blocks are checked first, and the block is then marked done.
    """
    r, col = block
    if completed is not None:
        for dr, dc in ((-1, 0), (0, -1), (-1, -1)):
            pr, pc = r + dr, col + dc
            if pr >= 0 and pc >= 0 and not completed[pr, pc]:
                raise ScheduleError(f"block {block} computed before dependency {(pr, pc)}")
    x = X if isinstance(X, np.ndarray) else _as_array(as_sequence(X))
    y = Y if isinstance(Y, np.ndarray) else _as_array(as_sequence(Y))
    _backend.active.fill_block(x, y, c, b, *grid.bounds(r, col))
    if completed is not None:
        completed[r, col] = True


def fill_parallel_into(x, y, c, b, config):
    _backend.active.fill_wavefront(x, y, c, b, config.block_size, config.workers)


def lcs_fill_parallel(X, Y, config=None, *, memory_budget=None):
    """Wavefront fill; returns ``(c, b, elapsed_seconds)``.

    Tables are identical to :func:`parlcs.core.lcs_fill_serial` for every
    configuration. Only the fill itself is timed.
    """
    config = config or ParallelConfig()
    X, Y = as_sequence(X), as_sequence(Y)
    c, b = allocate_tables(len(X), len(Y), memory_budget)
    x, y = _as_array(X), _as_array(Y)
    start = time.perf_counter()
    fill_parallel_into(x, y, c, b, config)
    elapsed = time.perf_counter() - start
    return c, b, elapsed


def compute_lcs(X, Y, config=None, *, memory_budget=None):
    """Parallel fill plus traceback, packaged as an :class:`LcsResult`."""
    X, Y = as_sequence(X), as_sequence(Y)
    c, b, elapsed = lcs_fill_parallel(X, Y, config, memory_budget=memory_budget)
    length = int(c[-1, -1])
    return LcsResult(
        length=length,
        subsequence=traceback(b, X, len(X), len(Y)),
        similarity_percent=similarity_percent(length, len(X), len(Y)),
        elapsed_seconds=elapsed,
    )
