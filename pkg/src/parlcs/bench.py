"""Serial vs. parallel timing over a grid of (M, N) sizes, with CSV output."""
import csv
import logging
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import _backend
from .core import _as_array, allocate_tables, fill_serial_into
from .errors import CapacityError, EquivalenceError
from .parallel import DEFAULT_BLOCK_SIZE, ParallelConfig, fill_parallel_into, hardware_concurrency
from .seqio import GENERATOR_NAME, generate_random

log = logging.getLogger(__name__)

# (parent length, child length) pairs of the published results table
TABLE1_GRID = [
    (10, 5), (100, 10), (200, 30), (500, 80), (800, 100), (1000, 150),
    (2000, 200), (5000, 200), (5000, 400), (5000, 800), (5000, 1000),
    (10000, 1000), (10000, 1500),
]
BENCH_ALPHABET = b"ACGT"
CSV_COLUMNS = ["M", "N", "workers", "block_size", "serial_s", "parallel_s", "speedup", "lcs_length"]


@dataclass(frozen=True)
class BenchCase:
    m: int
    n: int
    workers: int = 4
    block_size: int = DEFAULT_BLOCK_SIZE
    seed: int = 1
    repetitions: int = 3

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError(f"sequence lengths must be >= 0, got {self.m}x{self.n}")
        for name in ("workers", "block_size", "repetitions"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")

    def sequences(self):
        """Parent from ``seed``, child from ``seed + 1``."""
        return (generate_random(self.m, BENCH_ALPHABET, self.seed),
                generate_random(self.n, BENCH_ALPHABET, self.seed + 1))


@dataclass(frozen=True)
class BenchRecord:
    m: int
    n: int
    workers: int
    block_size: int
    seed: int
    repetitions: int
    serial_seconds: float
    parallel_seconds: float
    speedup: float
    lcs_length: int


def time_fill(run):
    """Wall-clock seconds spent in ``run()`` on a monotonic clock."""
    start = time.perf_counter()
    run()
    return time.perf_counter() - start


def speedup(serial, parallel):
    if parallel <= 0:
        raise ValueError(f"parallel time must be > 0, got {parallel}")
    return serial / parallel


def run_case(case):
    X, Y = case.sequences()
    x, y = _as_array(X), _as_array(Y)
    c_ser, b_ser = allocate_tables(case.m, case.n)
    serial = time_fill(lambda: fill_serial_into(x, y, c_ser, b_ser))

    config = ParallelConfig(workers=case.workers, block_size=case.block_size)
    parallel = float("inf")
    for _ in range(case.repetitions):
        c_par, b_par = allocate_tables(case.m, case.n)
        parallel = min(parallel, time_fill(lambda: fill_parallel_into(x, y, c_par, b_par, config)))
        if not (np.array_equal(c_ser, c_par) and np.array_equal(b_ser, b_par)):
            raise EquivalenceError(
                f"serial and parallel tables differ for {case.m}x{case.n} "
                f"(workers={case.workers}, block_size={case.block_size}, seed={case.seed}): "
                f"lengths {c_ser[-1, -1]} vs {c_par[-1, -1]}")
        del c_par, b_par

    return BenchRecord(
        **asdict(case),
        serial_seconds=serial,
        parallel_seconds=parallel,
        speedup=speedup(serial, parallel),
        lcs_length=int(c_ser[-1, -1]),
    )


def run_benchmark(cases, errors=None):
    """One record per case, in order.

    Capacity errors skip the case (appended to ``errors`` as ``(case, exc)``
    when a list is given); an equivalence failure aborts the whole run.
    """
    records = []
    for case in cases:
        try:
            records.append(run_case(case))
        except CapacityError as exc:
            log.warning("skipping %dx%d: %s", case.m, case.n, exc)
            if errors is not None:
                errors.append((case, exc))
    return records


def table1_cases(workers=4, block_size=DEFAULT_BLOCK_SIZE, seed=1, repetitions=3):
    return [BenchCase(m, n, workers, block_size, seed, repetitions) for m, n in TABLE1_GRID]


def _fmt_seconds(value):
    # 4 decimals on the mantissa: sub-millisecond timings keep their ratio
    return f"{value:.4e}"


def csv_row(record):
    serial_s = _fmt_seconds(record.serial_seconds)
    parallel_s = _fmt_seconds(record.parallel_seconds)
    ratio = speedup(float(serial_s), float(parallel_s))
    return [record.m, record.n, record.workers, record.block_size,
            serial_s, parallel_s, f"{ratio:.2f}", record.lcs_length]


def write_csv(records, path, metadata=None):
    meta = {
        "generator": GENERATOR_NAME,
        "seed_policy": "parent=seed child=seed+1 alphabet=ACGT",
        "host_workers": hardware_concurrency(),
        "backend": _backend.name,
    }
    meta.update(metadata or {})
    try:
        with open(path, "w", newline="") as fh:
            for key, value in meta.items():
                fh.write(f"# {key}={value}\n")
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for record in records:
                writer.writerow(csv_row(record))
    except OSError as exc:
        raise OSError(f"cannot write benchmark CSV {path}: {exc}") from exc


def read_csv(path):
    """Parse a file from :func:`write_csv` into ``(metadata, rows)``."""
    meta, lines = {}, []
    with open(path, newline="") as fh:
        for line in fh:
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                meta[key] = value
            elif line.strip():
                lines.append(line)
    reader = csv.reader(lines)
    header = next(reader, None)
    if header != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {header}")
    rows = []
    for fields in reader:
        row = dict(zip(CSV_COLUMNS, fields))
        for key in ("M", "N", "workers", "block_size", "lcs_length"):
            row[key] = int(row[key])
        for key in ("serial_s", "parallel_s", "speedup"):
            row[key] = float(row[key])
        rows.append(row)
    return meta, rows


def format_table(records):
    lines = [f"{'M':>6} {'N':>6} {'workers':>7} {'block':>5} "
             f"{'serial_s':>10} {'parallel_s':>10} {'speedup':>7} {'lcs':>6}"]
    for r in records:
        lines.append(f"{r.m:>6} {r.n:>6} {r.workers:>7} {r.block_size:>5} "
                     f"{r.serial_seconds:>10.4f} {r.parallel_seconds:>10.4f} "
                     f"{r.speedup:>7.2f} {r.lcs_length:>6}")
    return "\n".join(lines)
