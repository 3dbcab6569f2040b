"""Determinant-count formulas and wall-clock benchmarks of the three engines."""

from __future__ import annotations

import csv
import io
import multiprocessing as mp
import statistics
import time
from math import comb
from typing import Callable, Iterable, NamedTuple, Sequence

from .baseline_recursive import pgcd_recursive
from .errors import BadRange
from .habicht_gcd import epgcd
from .subres import DegreeVector
from .sylvester_gcd import CaseTable, pgcd

__all__ = ["ALGORITHMS", "Counts", "run_counts", "BenchRow", "run_bench", "bench_csv", "time_algorithm"]

ALGORITHMS: dict[str, Callable[..., CaseTable]] = {
    "sylvester": pgcd,
    "habicht": epgcd,
    "recursive": pgcd_recursive,
}

CSV_HEADER = ("degrees", "algo", "n_cases", "max_param_degree", "wall_ms")


class Counts(NamedTuple):
    vardulakis: int
    barnett: int
    kakie_ho: int
    proposed: int


def run_counts(d0: int, m: int, n: int) -> Counts:
    """Determinants needed to partition parameter space, per method.

    ``d0`` is the minimum input degree, ``m`` the maximum, ``n + 1`` the
    number of polynomials.
    """
    if not (1 <= d0 <= m) or n < 1:
        raise BadRange(f"need 1 <= d0 <= m and n >= 1, got d0={d0}, m={m}, n={n}")
    rows = m * (n + 1)
    vardulakis = sum(comb(rows, k) * comb(2 * m, k) for k in range(2 * m - d0, 2 * m + 1))
    barnett = sum(comb(rows, k) for k in range(m - d0, m + 1))
    kakie_ho = sum(comb(d0 - k + n, n) * comb(m + d0, k) for k in range(d0 + 1))
    return Counts(vardulakis, barnett, kakie_ho, comb(d0 + n, n))


class BenchRow(NamedTuple):
    degrees: DegreeVector
    algo: str
    n_cases: int | str
    max_param_degree: int | str
    wall_ms: float | str


def time_algorithm(algo: str, d: DegreeVector, repeat: int) -> tuple[CaseTable, list[float]]:
    """Run an engine ``repeat`` times; return the last table and times in ms."""
    fn = ALGORITHMS[algo]
    times = []
    table = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        table = fn(d)
        times.append((time.perf_counter() - t0) * 1000.0)
    return table, times


def _measure(algo: str, d: DegreeVector, repeat: int) -> tuple[int, int, float]:
    table, times = time_algorithm(algo, d, repeat)
    return len(table), table.max_param_degree(), statistics.median(times)


def _child(queue, algo, d, repeat):
    queue.put(_measure(algo, d, repeat))


def _measure_with_timeout(algo: str, d: DegreeVector, repeat: int,
                          timeout: float) -> tuple[int, int, float] | None:
    ctx = mp.get_context("fork")
    queue = ctx.Queue()
    proc = ctx.Process(target=_child, args=(queue, algo, d, repeat), daemon=True)
    proc.start()
    proc.join(timeout)
    if proc.is_alive():
        proc.terminate()
        proc.join()
        return None
    return queue.get() if not queue.empty() else None


def run_bench(degrees: Iterable[Sequence[int] | DegreeVector], algos: Sequence[str],
              repeat: int = 1, timeout: float | None = None) -> list[BenchRow]:
    """One row per (degrees, algo); wall time is the median over repeats.

    Rows that exceed ``timeout`` seconds report ``?`` in every measured column.
    """
    if repeat < 1:
        raise ValueError("repeat must be >= 1")
    unknown = [a for a in algos if a not in ALGORITHMS]
    if unknown:
        raise ValueError(f"unknown algorithm(s): {', '.join(unknown)}")
    rows = []
    for d in degrees:
        d = d if isinstance(d, DegreeVector) else DegreeVector(tuple(d))
        for algo in algos:
            if timeout is None:
                res = _measure(algo, d, repeat)
            else:
                res = _measure_with_timeout(algo, d, repeat, timeout)
            if res is None:
                rows.append(BenchRow(d, algo, "?", "?", "?"))
            else:
                rows.append(BenchRow(d, algo, res[0], res[1], round(res[2], 3)))
    return rows


def bench_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([",".join(map(str, r.degrees)), r.algo, r.n_cases, r.max_param_degree, r.wall_ms])
    return buf.getvalue()
