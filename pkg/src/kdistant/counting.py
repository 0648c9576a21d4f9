"""Counts of k-distant noncrossing matchings and partitions, and related tables.

``k=None`` (or ``math.inf``) stands for the row where every crossing is allowed.
"""
from __future__ import annotations

import csv
import io
import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from kdistant import kernels
from kdistant._pykernels import rgs_completions
from kdistant.partition import (classify, dcr, dne, enumerate_partitions, max_crossing,
                                max_nesting)

FAMILIES = ("matchings", "partitions")
INF = math.inf

BRUTE_LIMITS = {"partitions": 13, "matchings": 16}


def _check_family(family: str) -> bool:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    return family == "matchings"


# -- named sequences ------------------------------------------------------------

def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    if n < 2:
        return 1
    return motzkin(n - 1) + sum(motzkin(i) * motzkin(n - 2 - i) for i in range(n - 1))


@lru_cache(maxsize=None)
def _large_schroeder(n: int) -> int:
    if n == 0:
        return 1
    return _large_schroeder(n - 1) + sum(
        _large_schroeder(i) * _large_schroeder(n - 1 - i) for i in range(n))


def little_schroeder(n: int) -> int:
    return 1 if n == 0 else _large_schroeder(n) // 2


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def double_factorial_odd(n: int) -> int:
    """(2n-1)!!, the number of perfect matchings of [2n]."""
    out = 1
    for m in range(1, 2 * n, 2):
        out *= m
    return out


def total_count(family: str, n: int) -> int:
    if _check_family(family):
        return 0 if n % 2 else double_factorial_odd(n // 2)
    return bell(n)


# -- counting -----------------------------------------------------------------------

def _prefixes(n: int, matchings: bool, depth: int) -> list[tuple[int, ...]]:
    depth = min(depth, n)
    out = []
    for w in rgs_completions(depth, False):
        if matchings and max(Counter(w).values(), default=0) > 2:
            continue
        out.append(tuple(w))
    return out


def _histogram_job(args):
    n, matchings, prefix = args
    return kernels.crossing_distance_histogram(n, matchings, prefix)


@lru_cache(maxsize=64)
def crossing_distance_histogram(family: str, n: int, jobs: int = 1) -> dict[int, int]:
    """Histogram of each object's largest crossing distance (-1: no crossing).

    With ``jobs > 1`` the enumeration is split by a fixed-depth restricted-growth
    prefix and the partial histograms are summed; the result does not depend on
    scheduling.
    """
    matchings = _check_family(family)
    if n > BRUTE_LIMITS[family]:
        raise ValueError(f"brute-force {family} limited to n <= {BRUTE_LIMITS[family]}, got {n}")
    if jobs <= 1:
        return kernels.crossing_distance_histogram(n, matchings)
    tasks = [(n, matchings, p) for p in _prefixes(n, matchings, 4)]
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for h in ex.map(_histogram_job, tasks):
            total.update(h)
    return dict(total)


def count_brute(family: str, n: int, k: int | None, jobs: int = 1) -> int:
    """Number of objects with no k-distant crossing, by enumeration."""
    hist = crossing_distance_histogram(family, n, jobs)
    if k is None or k == INF:
        return sum(hist.values())
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(c for d, c in hist.items() if d < k)


def count_fast(family: str, n: int, k: int | None) -> int:
    """Number of objects with no k-distant crossing, by the profile DP."""
    matchings = _check_family(family)
    if k is None or k == INF:
        return total_count(family, n)
    return kernels.profile_count(n, k, matchings)


def joint_histogram(n: int, k: int) -> dict[tuple[int, int], int]:
    """Distribution of ``(dcr_k, dne_k)`` over all partitions of [n]."""
    if n > 10:
        raise ValueError("joint_histogram is limited to n <= 10")
    return dict(Counter((dcr(pi, k), dne(pi, k)) for pi in enumerate_partitions(n)))


def refined_counts(n: int, k: int) -> dict[tuple, int]:
    """Counts keyed by ``(openers, closers, max_crossing, max_nesting)``.

    Opener and closer sets are sorted tuples.
    """
    if n > 8:
        raise ValueError("refined_counts is limited to n <= 8")
    out: Counter = Counter()
    if n == 0:
        return {}
    for pi in enumerate_partitions(n):
        c = classify(pi)
        out[tuple(sorted(c.openers)), tuple(sorted(c.closers)),
            max_crossing(pi, k), max_nesting(pi, k)] += 1
    return dict(out)


# -- tables -----------------------------------------------------------------------

@dataclass
class CountTable:
    family: str
    rows: dict[tuple[float, int], int] = field(default_factory=dict)

    @property
    def ns(self) -> list[int]:
        return sorted({n for _, n in self.rows})

    @property
    def ks(self) -> list[float]:
        return sorted({k for k, _ in self.rows})


def _k_label(k) -> str:
    return "inf" if k == INF else str(int(k))


def build_table(family: str, max_n: int, max_k: int, paper_layout: bool = False) -> CountTable:
    """Counts for every (k, n) in range plus the unrestricted row.

    With ``paper_layout`` the matching table starts at k=1 (k=0 repeats it), and
    within each column only the first row reaching the unrestricted count is
    kept; later rows are left blank.
    """
    matchings = _check_family(family)
    ns = range(2, max_n + 1, 2) if matchings else range(1, max_n + 1)
    ks = range(1 if (matchings and paper_layout) else 0, max_k + 1)
    table = CountTable(family)
    for n in ns:
        full = total_count(family, n)
        for k in ks:
            c = count_fast(family, n, k)
            table.rows[k, n] = c
            if paper_layout and c == full:
                break
        table.rows[INF, n] = full
    return table


def to_csv(table: CountTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "n", "count"])
    for (k, n), c in sorted(table.rows.items()):
        w.writerow([_k_label(k), n, c])
    return buf.getvalue()


def to_json(table: CountTable) -> str:
    rows = [{"k": _k_label(k), "n": n, "count": str(c)} for (k, n), c in sorted(table.rows.items())]
    return json.dumps({"family": table.family, "rows": rows}, indent=1)


def to_grid(table: CountTable) -> list[list[str]]:
    """Rows of cells as printed: header row, one row per k, then the unrestricted row."""
    ns = table.ns
    grid = [["k\\n"] + [str(n) for n in ns]]
    for k in table.ks:
        label = "∞" if k == INF else str(int(k))
        grid.append([label] + [str(table.rows[k, n]) if (k, n) in table.rows else "" for n in ns])
    return grid


def to_text(table: CountTable) -> str:
    grid = to_grid(table)
    widths = [max(len(row[c]) for row in grid) for c in range(len(grid[0]))]
    lines = [" ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() for row in grid]
    lines.insert(1, "-" * len(lines[0]))
    lines.insert(len(lines) - 1, "-" * len(lines[0]))
    return "\n".join(lines) + "\n"


def emit_table(family: str, max_n: int, max_k: int, fmt: str = "csv",
               paper_layout: bool = False) -> str:
    table = build_table(family, max_n, max_k, paper_layout)
    if fmt == "csv":
        return to_csv(table)
    if fmt == "json":
        return to_json(table)
    if fmt == "text":
        return to_text(table)
    raise ValueError(f"unknown table format {fmt!r}")
