# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled fill kernels.

Same contract as :mod:`parlcs._pykernels`. ``c`` is the (m+1, n+1) uint32
length table with a zeroed border, ``b`` the (m, n) uint8 arrow table.
Row/column bounds passed to :func:`fill_block` are 1-based, half-open.
"""
from cython.parallel cimport prange

cdef enum:
    DIAG = 1
    UP = 2
    LEFT = 3


cdef inline Py_ssize_t _min(Py_ssize_t a, Py_ssize_t b) noexcept nogil:
    return a if a < b else b


cdef inline Py_ssize_t _max(Py_ssize_t a, Py_ssize_t b) noexcept nogil:
    return a if a > b else b


cdef void _block(const unsigned char* x, const unsigned char* y,
                 unsigned int* c, unsigned char* b, Py_ssize_t n,
                 Py_ssize_t i0, Py_ssize_t i1,
                 Py_ssize_t j0, Py_ssize_t j1) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef Py_ssize_t stride = n + 1
    cdef unsigned char xi
    cdef unsigned int up, left
    cdef unsigned int* row
    cdef unsigned int* prev
    cdef unsigned char* arrows
    for i in range(i0, i1):
        xi = x[i - 1]
        row = c + i * stride
        prev = row - stride
        arrows = b + (i - 1) * n - 1
        left = row[j0 - 1]
        for j in range(j0, j1):
            up = prev[j]
            if xi == y[j - 1]:
                left = prev[j - 1] + 1
                arrows[j] = DIAG
            elif up > left:
                left = up
                arrows[j] = UP
            else:
                arrows[j] = LEFT
            row[j] = left


def fill_block(const unsigned char[::1] x, const unsigned char[::1] y,
               unsigned int[:, ::1] c, unsigned char[:, ::1] b,
               Py_ssize_t i0, Py_ssize_t i1, Py_ssize_t j0, Py_ssize_t j1):
    """Fill rows [i0, i1) x columns [j0, j1) in row-major order."""
    cdef Py_ssize_t m = x.shape[0], n = y.shape[0]
    if i0 < 1 or j0 < 1 or i1 > m + 1 or j1 > n + 1:
        raise IndexError(f"block [{i0},{i1})x[{j0},{j1}) outside {m}x{n} table")
    if i0 >= i1 or j0 >= j1:
        return
    with nogil:
        _block(&x[0], &y[0], &c[0, 0], &b[0, 0], n, i0, i1, j0, j1)


def fill_wavefront(const unsigned char[::1] x, const unsigned char[::1] y,
                   unsigned int[:, ::1] c, unsigned char[:, ::1] b,
                   Py_ssize_t block_size, int workers,
                   Py_ssize_t min_cells_per_thread=2048):
    """Fill the whole table wave by wave; blocks of one wave run under OpenMP.

    The end of each ``prange`` is the barrier between consecutive waves. A
    wave gets at most one thread per ``min_cells_per_thread`` cells.
    """
    cdef Py_ssize_t m = x.shape[0], n = y.shape[0]
    cdef Py_ssize_t bs = block_size
    cdef Py_ssize_t brows, bcols, d, r, rlo, rhi, width
    cdef Py_ssize_t grain = min_cells_per_thread if min_cells_per_thread > 1 else 1
    cdef int nt
    if bs < 1:
        raise ValueError("block_size must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if m == 0 or n == 0:
        return
    brows = (m + bs - 1) // bs
    bcols = (n + bs - 1) // bs
    cdef const unsigned char* xp = &x[0]
    cdef const unsigned char* yp = &y[0]
    cdef unsigned int* cp = &c[0, 0]
    cdef unsigned char* bp = &b[0, 0]
    with nogil:
        for d in range(brows + bcols - 1):
            rlo = _max(0, d - bcols + 1)
            rhi = _min(d, brows - 1)
            width = rhi - rlo + 1
            nt = <int>_min(_min(workers, width), _max(1, width * bs * bs // grain))
            if nt <= 1:
                for r in range(rlo, rhi + 1):
                    _block(xp, yp, cp, bp, n,
                           r * bs + 1, _min((r + 1) * bs, m) + 1,
                           (d - r) * bs + 1, _min((d - r + 1) * bs, n) + 1)
            else:
                for r in prange(rlo, rhi + 1, num_threads=nt, schedule="static"):
                    _block(xp, yp, cp, bp, n,
                           r * bs + 1, _min((r + 1) * bs, m) + 1,
                           (d - r) * bs + 1, _min((d - r + 1) * bs, n) + 1)


def trace(const unsigned char[:, ::1] b, const unsigned char[::1] x,
          Py_ssize_t i, Py_ssize_t j):
    """Symbols on the arrow path from (i, j), in reverse order."""
    cdef bytearray out = bytearray(i if i < j else j)
    cdef unsigned char* op = out
    cdef Py_ssize_t k = 0
    cdef unsigned char arrow = 0
    with nogil:
        while i > 0 and j > 0:
            arrow = b[i - 1, j - 1]
            if arrow == DIAG:
                op[k] = x[i - 1]
                k += 1
                i -= 1
                j -= 1
            elif arrow == UP:
                i -= 1
            elif arrow == LEFT:
                j -= 1
            else:
                break
    if i > 0 and j > 0:
        raise ValueError(f"unfilled arrow cell at ({i}, {j})")
    return bytes(out[:k])
