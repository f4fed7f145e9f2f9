"""Time the dessin census with the compiled and the pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--degrees 6 7 8] [--repeat 3]
"""

import argparse
import json
import time

from hyperbound.dessins import AVAILABLE, enumerate_dessins


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degrees", type=int, nargs="+", default=[6, 7, 8])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    args = parser.parse_args()

    rows = []
    for d in args.degrees:
        row = {"degree": d}
        counts = set()
        for name in ("python", "cython"):
            if name not in AVAILABLE:
                row[name] = None
                continue
            seconds, entries = best_of(args.repeat, lambda: enumerate_dessins(d, backend=name))
            row[name] = seconds
            counts.add(len(entries))
        if len(counts) != 1:
            raise SystemExit(f"backends disagree at degree {d}: {counts}")
        row["count"] = counts.pop()
        if row.get("cython"):
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'d':>3} {'dessins':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for r in rows:
        cy = f"{r['cython']:.3f}" if r.get("cython") else "n/a"
        sp = f"{r['speedup']:.1f}x" if r.get("speedup") else "n/a"
        print(f"{r['degree']:>3} {r['count']:>8} {r['python']:>10.3f} {cy:>10} {sp:>8}")


if __name__ == "__main__":
    main()
