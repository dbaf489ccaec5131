"""Exit criteria. One test per criterion; a summary line per criterion is
printed at the end of the run (see conftest.pytest_terminal_summary)."""
import itertools
import random
import time

import numpy as np
import pytest

from parlcs import (
    ParallelConfig,
    _backend,
    brute_force_lcs,
    is_subsequence,
    lcs_fill_parallel,
    lcs_fill_serial,
    lcs_length,
    traceback,
)
from parlcs.bench import CSV_COLUMNS, TABLE1_GRID, BenchCase, read_csv, run_case
from parlcs.cli import main
from parlcs.parallel import hardware_concurrency
from parlcs.seqio import generate_random

pytestmark = pytest.mark.acceptance

WORKERS = (1, 2, 4, 8)
BLOCK_SIZES = (1, 16, 64, 257)


def _check_traceback(c, b, x, y):
    z = traceback(b, x, len(x), len(y))
    assert len(z) == c[-1, -1]
    assert is_subsequence(z, x) and is_subsequence(z, y)
    return z


def test_c1_oracle_equivalence_exhaustive(record_property):
    record_property("criterion", "1 exhaustive oracle equivalence, {A,C}, m,n <= 7")
    words = ["".join(p) for k in range(8) for p in itertools.product("AC", repeat=k)]
    start = time.perf_counter()
    pairs = 0
    for x in words:
        for y in words:
            c, b = lcs_fill_serial(x, y)
            assert int(c[-1, -1]) == brute_force_lcs(x, y), (x, y)
            # criterion 3 on the same pairs
            _check_traceback(c, b, x, y)
            pairs += 1
    elapsed = time.perf_counter() - start
    record_property("detail", f"{pairs} pairs in {elapsed:.1f}s (limit 60s)")
    assert pairs == 255 * 255
    assert elapsed < 60


def test_c2_serial_parallel_bit_equivalence(record_property):
    record_property("criterion", "2 serial/parallel bit-equivalence, 200 cases x 16 configs")
    rng = random.Random(20120101)
    start = time.perf_counter()
    fills = 0
    for case in range(200):
        m, n = rng.randint(0, 3000), rng.randint(0, 3000)
        x = generate_random(m, "ACGT", 2 * case)
        y = generate_random(n, "ACGT", 2 * case + 1)
        ref_c, ref_b = lcs_fill_serial(x, y)
        ref_z = _check_traceback(ref_c, ref_b, x, y)
        for workers, bs in itertools.product(WORKERS, BLOCK_SIZES):
            c, b, _ = lcs_fill_parallel(x, y, ParallelConfig(workers, bs))
            assert np.array_equal(c, ref_c), (m, n, workers, bs)
            assert np.array_equal(b, ref_b), (m, n, workers, bs)
            # criterion 3 on the same cases
            assert _check_traceback(c, b, x, y) == ref_z
            fills += 1
    elapsed = time.perf_counter() - start
    record_property("detail", f"{fills} parallel fills in {elapsed:.1f}s (limit 180s), "
                              f"backend={_backend.name}")
    assert elapsed < 180


def test_c3_traceback_validity(record_property):
    # criteria 1 and 2 assert validity on every one of their cases; this adds
    # a direct check across both backends on mixed-alphabet inputs
    record_property("criterion", "3 traceback validity")
    rng = random.Random(3)
    checked = 0
    for name in sorted(_backend.BACKENDS):
        previous = _backend.use(name)
        try:
            for _ in range(200):
                x = "".join(rng.choices("ACGT", k=rng.randint(0, 120)))
                y = "".join(rng.choices("ACGT", k=rng.randint(0, 120)))
                c, b, _ = lcs_fill_parallel(x, y, ParallelConfig(rng.randint(1, 4), rng.randint(1, 40)))
                _check_traceback(c, b, x, y)
                checked += 1
        finally:
            _backend.use(previous)
    record_property("detail", f"{checked} extra cases, 0 failures (plus every case of 1 and 2)")


def test_c4_append_property(record_property):
    record_property("criterion", "4 append property, 100 seeded triples")
    rng = random.Random(4)
    for k in range(100):
        x = generate_random(rng.randint(0, 500), "ACGT", 1000 + k)
        y = generate_random(rng.randint(0, 500), "ACGT", 2000 + k)
        s = rng.choice([b"A", b"C", b"G", b"T"])
        assert lcs_length(x + s, y + s) == lcs_length(x, y) + 1
    record_property("detail", "100/100")


def test_c5_table1_grid(tmp_path, record_property):
    record_property("criterion", "5 bench --table1 completes 13 sizes with equivalence gates")
    out = tmp_path / "table1.csv"
    start = time.perf_counter()
    status = main(["bench", "--table1", "--workers", "4", "--seed", "1", "--out", str(out)])
    elapsed = time.perf_counter() - start
    assert status == 0
    _, rows = read_csv(out)
    assert [(r["M"], r["N"]) for r in rows] == TABLE1_GRID
    record_property("detail", f"13 rows in {elapsed:.1f}s (limit 600s)")
    assert elapsed < 600


def test_c6_speedup_smoke(record_property):
    record_property("criterion", "6 speedup >= 1.8 at 5000x5000, 4 workers, block 64")
    threads = hardware_concurrency()
    if threads < 4:
        pytest.skip(f"needs >= 4 hardware threads, host has {threads}")
    record = run_case(BenchCase(5000, 5000, workers=4, block_size=64, seed=1, repetitions=3))
    record_property("detail", f"speedup {record.speedup:.2f} "
                              f"(serial {record.serial_seconds:.3f}s, parallel {record.parallel_seconds:.3f}s)")
    assert record.speedup >= 1.8


def test_c7_csv_contract(tmp_path, record_property):
    record_property("criterion", "7 CSV header and |speedup - serial/parallel| < 0.005")
    out = tmp_path / "sweep.csv"
    sizes = "10x5,100x10,500x80,2000x200"
    assert main(["bench", "--sizes", sizes, "--workers", "1,2,4", "--seed", "7", "--out", str(out)]) == 0
    lines = [ln for ln in out.read_text().splitlines() if not ln.startswith("#")]
    assert lines[0] == ",".join(CSV_COLUMNS)
    _, rows = read_csv(out)
    assert len(rows) == 12
    worst = max(abs(r["speedup"] - r["serial_s"] / r["parallel_s"]) for r in rows)
    record_property("detail", f"{len(rows)} rows, max deviation {worst:.4f}")
    assert worst < 0.005
