"""Pure-Python fill kernels, used when the compiled extension is unavailable.

Threads here give the right schedule but no speedup (the GIL serializes the
inner loop); they exist so that the wavefront path is exercised identically.
"""
from concurrent.futures import ThreadPoolExecutor

DIAG, UP, LEFT = 1, 2, 3


def fill_block(x, y, c, b, i0, i1, j0, j1):
    """Fill rows [i0, i1) x columns [j0, j1) (1-based) in row-major order."""
    m, n = len(x), len(y)
    if i0 < 1 or j0 < 1 or i1 > m + 1 or j1 > n + 1:
        raise IndexError(f"block [{i0},{i1})x[{j0},{j1}) outside {m}x{n} table")
    if i0 >= i1 or j0 >= j1:
        return
    ys = y[j0 - 1:j1 - 1].tolist()
    width = j1 - j0
    for i in range(i0, i1):
        xi = int(x[i - 1])
        prev = c[i - 1, j0 - 1:j1].tolist()
        left = int(c[i, j0 - 1])
        vals = [0] * width
        arrows = [0] * width
        for k in range(width):
            up = prev[k + 1]
            if xi == ys[k]:
                left = prev[k] + 1
                arrows[k] = DIAG
            elif up > left:
                left = up
                arrows[k] = UP
            else:
                arrows[k] = LEFT
            vals[k] = left
        c[i, j0:j1] = vals
        b[i - 1, j0 - 1:j1 - 1] = arrows


def fill_wavefront(x, y, c, b, block_size, workers, min_cells_per_thread=2048):
    """Fill the whole table wave by wave; each wave is one pool.map (barrier).

    ``min_cells_per_thread`` is accepted for signature parity and ignored.
    """
    if block_size < 1:
        raise ValueError("block_size must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    m, n = len(x), len(y)
    if m == 0 or n == 0:
        return
    bs = block_size
    brows = -(-m // bs)
    bcols = -(-n // bs)

    def run(rc):
        r, col = rc
        fill_block(x, y, c, b, r * bs + 1, min((r + 1) * bs, m) + 1,
                   col * bs + 1, min((col + 1) * bs, n) + 1)

    if workers == 1:
        for d in range(brows + bcols - 1):
            for r in range(max(0, d - bcols + 1), min(d, brows - 1) + 1):
                run((r, d - r))
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for d in range(brows + bcols - 1):
            wave = [(r, d - r) for r in range(max(0, d - bcols + 1), min(d, brows - 1) + 1)]
            list(pool.map(run, wave))



def trace(b, x, i, j):
    """Symbols on the arrow path from (i, j), in reverse order."""
    out = bytearray()
    while i > 0 and j > 0:
        arrow = b[i - 1, j - 1]
        if arrow == DIAG:
            out.append(x[i - 1])
            i -= 1
            j -= 1
        elif arrow == UP:
            i -= 1
        elif arrow == LEFT:
            j -= 1
        else:
            raise ValueError(f"unfilled arrow cell at ({i}, {j})")
    return bytes(out)
