"""Timing and operation-count harness for the nonlinearity methods.

For each ``n`` a fixed stream of random functions is drawn from the seed and
every selected method is timed on each function with a monotonic clock. The
growth coefficient ``log2(t_{n+1} / t_n)`` is compared with
``log2((n+1) 2**(n+1) / (n 2**n))``, the ratio predicted by ``O(n 2**n)``
cost.

The default ``python`` backend times the scalar butterflies, whose running
time is proportional to the operation count. The numpy kernels are
dominated by per-call overhead at these sizes and do not show the
asymptotic growth.
"""

from __future__ import annotations

import csv
import gc
import math
import time
from dataclasses import dataclass
from typing import Callable, Iterable, TextIO

from boolnl.bfcore import BRUTE_FORCE_MAX_N, MAX_N, TruthTable, brute_force_nonlinearity
from boolnl.counters import OpCounters
from boolnl.errors import SizeLimitError
from boolnl.ideal import LAZY_MAX_N, nonlinearity_ideal
from boolnl.nlp import nlp_butterfly, nlp_evaluate_all
from boolnl.rng import random_functions
from boolnl.transforms import nonlinearity_fwt

METHODS = ("fwt", "nlp", "ideal", "brute")
CSV_HEADER = ("n", "method", "trials", "mean_ns", "sums", "doublings")

_MAX_N = {"fwt": MAX_N, "nlp": MAX_N, "ideal": LAZY_MAX_N, "brute": BRUTE_FORCE_MAX_N}


@dataclass(frozen=True)
class BenchRecord:
    n: int
    method: str
    trials: int
    mean_ns: float
    sums: float
    doublings: float

    def csv_row(self) -> list:
        return [self.n, self.method, self.trials, f"{self.mean_ns:.1f}",
                _fmt_count(self.sums), _fmt_count(self.doublings)]


def _fmt_count(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:.3f}"


def _kernel(method: str, backend: str) -> Callable[[TruthTable, OpCounters], int]:
    if method == "fwt":
        return lambda tt, ops: nonlinearity_fwt(tt, ops, backend)
    if method == "nlp":
        # op counts cover the coefficient butterfly only; evaluation adds (n+1) 2**n sums
        def nlp(tt, ops):
            evals = nlp_evaluate_all(nlp_butterfly(tt, ops, backend), backend=backend)
            return int(evals.values.min())
        return nlp
    if method == "ideal":
        return lambda tt, ops: nonlinearity_ideal(tt)
    if method == "brute":
        return lambda tt, ops: brute_force_nonlinearity(tt)[0]
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def run_bench(
    n_min: int,
    n_max: int,
    trials: int,
    seed: int,
    methods: Iterable[str] = ("fwt", "nlp"),
    backend: str = "python",
    chunk: int = 25,
) -> list[BenchRecord]:
    methods = tuple(methods)
    if trials < 1 or chunk < 1:
        raise ValueError("trials and chunk must be at least 1")
    if not 1 <= n_min <= n_max:
        raise ValueError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}; expected one of {METHODS}")
        if n_max > _MAX_N[m]:
            raise SizeLimitError(f"method {m} limited to n <= {_MAX_N[m]}")
    kernels = {m: _kernel(m, backend) for m in methods}

    sizes = range(n_min, n_max + 1)
    funcs = {n: random_functions(n, trials, seed) for n in sizes}
    ops = {(n, m): OpCounters() for n in sizes for m in methods}
    total_ns = dict.fromkeys(ops, 0)
    values: dict[tuple[int, str], list[int]] = {key: [] for key in ops}

    # chunks of trials are interleaved across sizes so slow phases of the host
    # hit every size alike, while each chunk amortises cold-cache start-up
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for lo in range(0, trials, chunk):
            for n in sizes:
                for m in methods:
                    key = (n, m)
                    kernel, counter, out = kernels[m], ops[key], values[key]
                    for tt in funcs[n][lo : lo + chunk]:
                        start = time.perf_counter_ns()
                        out.append(kernel(tt, counter))
                        total_ns[key] += time.perf_counter_ns() - start
    finally:
        if gc_was_enabled:
            gc.enable()

    records = []
    for n in sizes:
        for m in methods:
            if values[(n, m)] != values[(n, methods[0])]:
                raise RuntimeError(f"methods {methods[0]} and {m} disagree at n={n}")
            c = ops[(n, m)]
            records.append(BenchRecord(n, m, trials, max(total_ns[(n, m)], 1) / trials,
                                       c.sums / trials, c.doublings / trials))
    return records


def theoretical_growth(n: int) -> float:
    return math.log2((n + 1) * 2 ** (n + 1) / (n * 2**n))


def growth_table(records: Iterable[BenchRecord]) -> list[tuple[int, str, float]]:
    """``(n, method, log2(t_{n+1}/t_n))`` for each consecutive pair of sizes."""
    by_key = {(r.n, r.method): r.mean_ns for r in records}
    rows = []
    for (n, method), t in sorted(by_key.items()):
        nxt = by_key.get((n + 1, method))
        if nxt is not None:
            rows.append((n, method, math.log2(nxt / t)))
    return rows


def write_csv(records: Iterable[BenchRecord], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(r.csv_row())


def format_growth(records: list[BenchRecord]) -> str:
    rows = growth_table(records)
    methods = list(dict.fromkeys(r.method for r in records))
    pairs = sorted({n for n, _, _ in rows})
    if not pairs:
        return "(need at least two sizes for growth coefficients)"
    lookup = {(n, m): g for n, m, g in rows}
    width = max(10, *(len(m) for m in methods))
    head = f"{'n':<{width}}" + "".join(f"{f'{n}-{n + 1}':>8}" for n in pairs)
    lines = [head, f"{'theory':<{width}}" + "".join(f"{theoretical_growth(n):8.2f}" for n in pairs)]
    for m in methods:
        lines.append(f"{m:<{width}}" + "".join(f"{lookup[(n, m)]:8.2f}" for n in pairs))
    return "\n".join(lines)
