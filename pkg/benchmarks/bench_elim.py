#!/usr/bin/env python3
"""Benchmark: compiled vs pure-Python elimination lane.

Times `graded_ranks` on real presentations (the degree-span eliminations
dominate) by swapping the Echelon class used by fmchow.ranks, and also
times the raw kernels on the extracted rows of the largest degree slice.
Both lanes compute identical tables; the point is the wall-clock ratio.

Usage: python3 benchmarks/bench_elim.py [--repeat N]
"""

import argparse
import time

import fmchow.ranks as ranks_module
from fmchow._elim import BACKENDS, get_echelon_class
from fmchow.geomdata import ProjectiveGeometry
from fmchow.present import chow_presentation
from fmchow.ranks import DegreeSpan
from fmchow.setcomb import LargeFamily

INSTANCES = [
    ("d=1 n=3 all large", 1, 3),
    ("d=2 n=3 all large", 2, 3),
    ("d=1 n=4 all large", 1, 4),
]


def time_graded_ranks(presentation, backend, repeat):
    echelon = get_echelon_class(backend)
    original = ranks_module.Echelon
    ranks_module.Echelon = echelon  # intentional swap for the measurement
    try:
        best, table = None, None
        for _ in range(repeat):
            start = time.perf_counter()
            table = ranks_module.graded_ranks(presentation)
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
        return best, table
    finally:
        ranks_module.Echelon = original


def extract_rows(presentation, degree):
    """Raw alive-column rows of the degree slice, in the production
    insertion order (sparsest first), for kernel-only timing."""
    span = DegreeSpan(presentation, degree)
    generic = [rel for rel in presentation.relations if len(rel.terms) > 1]
    rows = span._product_rows(generic)
    rows.sort(key=lambda row: (len(row[0]), row[0], row[1]))
    return rows, len(span._alive_index)


def time_kernel(rows, ncols, backend, repeat):
    echelon_cls = get_echelon_class(backend)
    best = rank = None
    for _ in range(repeat):
        ech = echelon_cls(ncols)
        start = time.perf_counter()
        for cols, coeffs in rows:
            ech.insert(list(cols), list(coeffs))
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
        rank = ech.rank
    return best, rank


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    lanes = sorted(BACKENDS)
    if len(lanes) == 1:
        print("only the pure lane is available; build the extension to compare")

    print(f"lanes: {', '.join(lanes)}  (best of {args.repeat})\n")
    header = f"{'instance':<28}" + "".join(f"{lane:>12}" for lane in lanes)
    print(header + f"{'speedup':>10}" if len(lanes) > 1 else header)
    for label, dim, n in INSTANCES:
        presentation = chow_presentation(
            ProjectiveGeometry(dim, n), LargeFamily.all_subsets(n)
        )
        times, tables = {}, {}
        for lane in lanes:
            times[lane], tables[lane] = time_graded_ranks(
                presentation, lane, args.repeat
            )
        assert len({tuple(t) for t in tables.values()}) == 1, "lanes disagree"
        row = f"{label:<28}" + "".join(f"{times[lane]:>11.3f}s" for lane in lanes)
        if len(lanes) > 1:
            row += f"{times['python'] / times['compiled']:>9.2f}x"
        print(row)

    # raw kernel on the heaviest slice
    presentation = chow_presentation(
        ProjectiveGeometry(1, 4), LargeFamily.all_subsets(4)
    )
    rows, ncols = extract_rows(presentation, presentation.top_degree)
    label = f"top-degree slice ({len(rows)}x{ncols})"
    times, ranks = {}, {}
    for lane in lanes:
        times[lane], ranks[lane] = time_kernel(rows, ncols, lane, args.repeat)
    assert len(set(ranks.values())) == 1, "lanes disagree on rank"
    row = f"{label:<28}" + "".join(f"{times[lane]:>11.3f}s" for lane in lanes)
    if len(lanes) > 1:
        row += f"{times['python'] / times['compiled']:>9.2f}x"
    print(row)


if __name__ == "__main__":
    main()
