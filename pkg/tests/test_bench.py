import math

import pytest

from parlcs import EquivalenceError
from parlcs import bench
from parlcs.bench import (
    CSV_COLUMNS,
    TABLE1_GRID,
    BenchCase,
    BenchRecord,
    read_csv,
    run_benchmark,
    speedup,
    time_fill,
    write_csv,
)
from parlcs.errors import CapacityError


def test_time_fill_nonnegative():
    assert time_fill(lambda: None) >= 0


def test_time_fill_scales_with_work():
    big = BenchCase(5000, 200, workers=1, repetitions=1)
    small = BenchCase(10, 5, workers=1, repetitions=1)
    assert bench.run_case(big).serial_seconds > bench.run_case(small).serial_seconds


def test_speedup():
    assert speedup(10.0, 5.0) == 2.0
    assert speedup(7.0, 7.0) == 1.0
    # published 3.22x at 18.90 s parallel time implies ~60.9 s serial
    assert 3.22 * 18.90 == pytest.approx(60.9, abs=0.05)
    with pytest.raises(ValueError):
        speedup(1.0, 0.0)


def test_table1_grid():
    assert len(TABLE1_GRID) == 13
    assert TABLE1_GRID[0] == (10, 5) and TABLE1_GRID[-1] == (10000, 1500)


def test_bench_case_validation():
    with pytest.raises(ValueError):
        BenchCase(10, 5, workers=0)
    with pytest.raises(ValueError):
        BenchCase(-1, 5)


def test_run_benchmark_small():
    records = run_benchmark([BenchCase(10, 5, workers=4)])
    assert len(records) == 1
    r = records[0]
    assert 0 <= r.lcs_length <= 5
    assert r.speedup == pytest.approx(r.serial_seconds / r.parallel_seconds)


def test_run_benchmark_deterministic_lengths():
    cases = [BenchCase(m, n, workers=2, seed=5, repetitions=1) for m, n in [(100, 10), (300, 40)]]
    first = [r.lcs_length for r in run_benchmark(cases)]
    second = [r.lcs_length for r in run_benchmark(cases)]
    assert first == second


def test_worker_sweep_constant_length():
    cases = [BenchCase(200, 150, workers=w, block_size=16, seed=3, repetitions=1) for w in (1, 2, 4, 8)]
    assert len({r.lcs_length for r in run_benchmark(cases)}) == 1


def test_capacity_error_skips_case(monkeypatch):
    real = bench.allocate_tables

    def limited(m, n, memory_budget=None):
        if m * n > 1000:
            raise CapacityError("too big")
        return real(m, n, memory_budget)

    monkeypatch.setattr(bench, "allocate_tables", limited)
    errors = []
    records = run_benchmark([BenchCase(100, 100), BenchCase(10, 5)], errors)
    assert [(r.m, r.n) for r in records] == [(10, 5)]
    assert len(errors) == 1 and errors[0][0].m == 100


def test_equivalence_failure_aborts(monkeypatch):
    def broken(x, y, c, b, config):
        pass

    monkeypatch.setattr(bench, "fill_parallel_into", broken)
    with pytest.raises(EquivalenceError):
        run_benchmark([BenchCase(20, 20), BenchCase(10, 5)])


def _record(serial, parallel, lcs=3):
    return BenchRecord(10, 5, 4, 64, 1, 3, serial, parallel, serial / parallel, lcs)


def test_write_csv_empty(tmp_path):
    path = tmp_path / "r.csv"
    write_csv([], path)
    lines = path.read_text().splitlines()
    assert all(line.startswith("#") for line in lines[:-1])
    assert lines[-1] == ",".join(CSV_COLUMNS)
    meta, rows = read_csv(path)
    assert rows == [] and meta["generator"] == "splitmix64"
    assert int(meta["host_workers"]) >= 1


def test_write_csv_one_record(tmp_path):
    path = tmp_path / "r.csv"
    write_csv([_record(0.0010, 0.0010)], path)
    data = [ln for ln in path.read_text().splitlines() if not ln.startswith("#")][1:]
    assert len(data) == 1
    fields = data[0].split(",")
    assert len(fields) == 8
    assert fields[6] == "1.00"
    _, rows = read_csv(path)
    assert rows[0]["serial_s"] == 0.0010 and rows[0]["lcs_length"] == 3


@pytest.mark.parametrize("serial, parallel", [
    (3.3e-6, 1.7e-6), (0.123456, 0.0456789), (60.9, 18.9), (1e-7, 3e-7), (2.0049999, 1.0),
])
def test_csv_speedup_consistent(tmp_path, serial, parallel):
    path = tmp_path / "r.csv"
    write_csv([_record(serial, parallel)], path)
    _, rows = read_csv(path)
    row = rows[0]
    assert math.isclose(row["serial_s"], serial, rel_tol=1e-4)
    assert math.isclose(row["parallel_s"], parallel, rel_tol=1e-4)
    assert abs(row["speedup"] - row["serial_s"] / row["parallel_s"]) < 0.005


def test_write_csv_error_has_path(tmp_path):
    target = tmp_path / "missing" / "r.csv"
    with pytest.raises(OSError, match="missing"):
        write_csv([], target)
