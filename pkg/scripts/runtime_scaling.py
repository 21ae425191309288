#!/usr/bin/env python3
"""Splitting runtime against graph size at fixed average degree.

Generates G(n, p) with p = d / (n - 1) so the average degree stays
constant as n grows, times the decomposition machinery alone (subsolver
time excluded), and fits split time against n. On sparse inputs the
reductions do almost all the work and the fit comes out close to linear.

Usage:
    python3 scripts/runtime_scaling.py --sizes 3000:20000:500 --avg-degree 50
"""

import argparse
import statistics
import sys

import numpy as np

from cliquesplit import BenchConfig, emit_csv, run_experiment


def parse_sizes(spec: str) -> list[int]:
    if ":" in spec:
        start, stop, step = (int(tok) for tok in spec.split(":"))
        return list(range(start, stop + 1, step))
    return [int(tok) for tok in spec.split(",")]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="3000:20000:500")
    parser.add_argument("--avg-degree", type=float, default=50.0)
    parser.add_argument("--seeds", type=int, default=3)
    parser.add_argument("--vertex-limit", type=int, default=45)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    sizes = parse_sizes(args.sizes)
    all_rows = []
    times = []
    for n in sizes:
        cfg = BenchConfig(
            experiment=f"runtime-scaling-n{n}",
            graph="gnp",
            n=n,
            avg_degree=args.avg_degree,
            vertex_limit=args.vertex_limit,
            seeds=tuple(range(args.seeds)),
        )
        records = run_experiment(cfg)
        all_rows.extend(records)
        median_time = statistics.median(r.split_time_wall_s for r in records[:-1])
        median_total = statistics.median(r.modeled_total_wall_s for r in records[:-1])
        times.append(median_time)
        print(
            f"n={n}: split {median_time:.2f}s, modeled total {median_total:.2f}s",
            file=sys.stderr,
        )

    xs = np.array(sizes, dtype=float)
    ys = np.array(times)
    slope, intercept = np.polyfit(xs, ys, 1)
    residual = ys - (slope * xs + intercept)
    r2 = 1.0 - float(np.sum(residual**2) / max(np.sum((ys - ys.mean()) ** 2), 1e-12))
    print(f"linear fit: {slope * 1000:.3f} ms/vertex, R^2={r2:.3f}", file=sys.stderr)

    csv_text = emit_csv(all_rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
