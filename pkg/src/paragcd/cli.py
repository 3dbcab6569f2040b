"""Command-line front end: compute, verify, counts, bench."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import ALGORITHMS, bench_csv, run_bench, run_counts
from .errors import ParagcdError
from .oracle import VerificationReport, mutate_table, verify_case_table
from .serialize import dumps, table_to_text
from .subres import DegreeVector
from .sylvester_gcd import CaseTable

__all__ = ["main", "run_compute", "run_verify"]


def _compute(degrees, algo: str, normalize: bool = False) -> CaseTable:
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}")
    d = degrees if isinstance(degrees, DegreeVector) else DegreeVector(tuple(degrees))
    return ALGORITHMS[algo](d, normalize=normalize)


def run_compute(degrees, algo: str, format: str = "json", normalize: bool = False,
                explicit_conditions: bool = False) -> str:
    """Serialized case table for the given degrees and engine."""
    table = _compute(degrees, algo, normalize)
    if format == "json":
        return dumps(table, explicit_conditions) + "\n"
    if format == "text":
        return table_to_text(table, explicit_conditions)
    raise ValueError(f"unknown format {format!r}")


def run_verify(degrees, algo: str, trials: int, seed: int, bound: int,
               mutate: bool = False) -> VerificationReport:
    table = _compute(degrees, algo)
    if mutate:
        table = mutate_table(table)
    return verify_case_table(table, trials, seed, bound)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="paragcd", description="Parametric gcd case tables.")
    sub = ap.add_subparsers(dest="command", required=True)
    algos = sorted(ALGORITHMS)

    c = sub.add_parser("compute", help="compute a case table")
    c.add_argument("--degrees", required=True, help="comma-separated, d0 first and minimal")
    c.add_argument("--algo", choices=algos, default="sylvester")
    c.add_argument("--format", choices=("text", "json"), default="json")
    c.add_argument("--normalize", action="store_true", help="strip integer content of each R")
    c.add_argument("--explicit-conditions", action="store_true")
    c.add_argument("--out")

    v = sub.add_parser("verify", help="check a case table against random specializations")
    v.add_argument("--degrees", required=True)
    v.add_argument("--algo", choices=algos, default="sylvester")
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--bound", type=int, default=20)
    v.add_argument("--mutate", action="store_true", help="corrupt the table first")

    n = sub.add_parser("counts", help="determinant counts per method")
    n.add_argument("--d0", type=int, required=True)
    n.add_argument("--m", type=int, required=True)
    n.add_argument("--n", type=int, required=True)

    b = sub.add_parser("bench", help="time the engines")
    b.add_argument("--degrees", required=True, action="append",
                   help="comma-separated degrees; repeat the flag for several rows")
    b.add_argument("--algos", default="sylvester,habicht,recursive")
    b.add_argument("--repeat", type=int, default=1)
    b.add_argument("--timeout", type=float)
    b.add_argument("--out")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "compute":
            text = run_compute(DegreeVector.parse(args.degrees), args.algo, args.format,
                               args.normalize, args.explicit_conditions)
            _write(text, args.out)
            return 0
        if args.command == "verify":
            report = run_verify(DegreeVector.parse(args.degrees), args.algo, args.trials,
                                args.seed, args.bound, args.mutate)
            print(json.dumps(report.as_dict(), indent=1))
            return 0 if report.ok else 1
        if args.command == "counts":
            counts = run_counts(args.d0, args.m, args.n)
            print(json.dumps(counts._asdict()))
            return 0
        if args.command == "bench":
            degrees = [DegreeVector.parse(s) for s in args.degrees]
            algos = [a for a in args.algos.split(",") if a]
            rows = run_bench(degrees, algos, args.repeat, args.timeout)
            _write(bench_csv(rows), args.out)
            return 0
    except (ParagcdError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
