"""Command line: ``parlcs compute | bench | gen``."""
import argparse
import logging
import sys

from . import _backend
from .bench import BenchCase, TABLE1_GRID, format_table, run_benchmark, write_csv
from .errors import EquivalenceError, LcsError
from .parallel import DEFAULT_BLOCK_SIZE, ParallelConfig, compute_lcs, hardware_concurrency
from .seqio import InputFormat, generate_random, load_sequence, write_sequence


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return value


def _int_list(text):
    try:
        values = [_positive_int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K[,K...], got {text!r}")
    return values


def _sizes(text):
    sizes = []
    for part in text.split(","):
        m, sep, n = part.lower().partition("x")
        if not sep or not m.isdigit() or not n.isdigit():
            raise argparse.ArgumentTypeError(f"expected MxN[,MxN...], got {text!r}")
        sizes.append((int(m), int(n)))
    return sizes


def build_parser():
    parser = argparse.ArgumentParser(prog="parlcs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="LCS of a parent and a child sequence")
    p.add_argument("--parent", required=True)
    p.add_argument("--child", required=True)
    p.add_argument("--workers", type=_positive_int, default=None,
                   help="default: hardware concurrency")
    p.add_argument("--block-size", type=_positive_int, default=DEFAULT_BLOCK_SIZE)
    p.add_argument("--traceback", action="store_true", help="print the subsequence")
    p.add_argument("--format", choices=[f.value for f in InputFormat], default=None,
                   help="default: fasta for .fa/.fasta, else plain")
    p.add_argument("--validate-dna", action="store_true")

    p = sub.add_parser("bench", help="serial vs parallel timings to CSV")
    grid = p.add_mutually_exclusive_group(required=True)
    grid.add_argument("--table1", action="store_true", help="the 13-size published grid")
    grid.add_argument("--sizes", type=_sizes)
    p.add_argument("--workers", type=_int_list, default=None)
    p.add_argument("--block-size", type=_positive_int, default=DEFAULT_BLOCK_SIZE)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--repetitions", type=_positive_int, default=3)
    p.add_argument("--out", required=True)

    p = sub.add_parser("gen", help="write a seeded random sequence")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--alphabet", default="ACGT")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    return parser


def cmd_compute(args):
    parent = load_sequence(args.parent, args.format, args.validate_dna)
    child = load_sequence(args.child, args.format, args.validate_dna)
    config = ParallelConfig(workers=args.workers or hardware_concurrency(),
                            block_size=args.block_size)
    result = compute_lcs(parent, child, config)
    print(f"length: {result.length}")
    print(f"similarity_percent: {result.similarity_percent:.2f}")
    print(f"elapsed_seconds: {result.elapsed_seconds:.6f}")
    if args.traceback:
        print(f"subsequence: {result.subsequence.decode('ascii', 'replace')}")
    return 0


def cmd_bench(args):
    sizes = TABLE1_GRID if args.table1 else args.sizes
    workers = args.workers or [hardware_concurrency()]
    cases = [BenchCase(m, n, w, args.block_size, args.seed, args.repetitions)
             for m, n in sizes for w in workers]
    errors = []
    try:
        records = run_benchmark(cases, errors)
    except EquivalenceError as exc:
        print(f"parlcs bench: equivalence gate failed: {exc}", file=sys.stderr)
        return 1
    write_csv(records, args.out)
    print(format_table(records))
    print(f"wrote {len(records)} rows to {args.out} (backend: {_backend.name})")
    for case, exc in errors:
        print(f"parlcs bench: {case.m}x{case.n} skipped: {exc}", file=sys.stderr)
    return 1 if errors else 0


def cmd_gen(args):
    write_sequence(args.out, generate_random(args.length, args.alphabet, args.seed))
    return 0


COMMANDS = {"compute": cmd_compute, "bench": cmd_bench, "gen": cmd_gen}


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (OSError, LcsError, ValueError) as exc:
        print(f"parlcs {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
