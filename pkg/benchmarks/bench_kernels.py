"""Compare the compiled and pure-Python kernels on the two exhaustive sweeps.

    python benchmarks/bench_kernels.py [--scan-n 6] [--prufer-n 8] [--repeat 3]
"""

import argparse
import time

import numpy as np

from hindex import kernels


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scan-n", type=int, default=6)
    parser.add_argument("--prufer-n", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled kernels not built; only the Python fallback is available")

    rows = []
    results = {}
    for name in backends:
        t_scan, block = best_of(args.repeat, lambda: kernels.scan_connected(args.scan_n, backend=name))
        t_pruf, codes = best_of(args.repeat, lambda: kernels.prufer_tree_codes(args.prufer_n, backend=name))
        results[name] = (block, codes)
        rows.append((name, t_scan, len(block), t_pruf, len(np.unique(codes))))

    print(f"{'backend':<10} {'scan n=' + str(args.scan_n):>14} {'graphs':>9} {'prufer n=' + str(args.prufer_n):>14} {'classes':>8}")
    for name, ts, ng, tp, nc in rows:
        print(f"{name:<10} {ts:>13.4f}s {ng:>9d} {tp:>13.4f}s {nc:>8d}")
    if len(rows) == 2:
        (_, ts_c, _, tp_c, _), (_, ts_p, _, tp_p, _) = rows
        print(f"speedup    {ts_p / ts_c:>13.1f}x {'':>9} {tp_p / tp_c:>13.1f}x")
        a, b = results["compiled"], results["python"]
        same = np.array_equal(a[0].h_scaled, b[0].h_scaled) and np.array_equal(a[1], b[1])
        print("outputs identical" if same else "OUTPUTS DIFFER")


if __name__ == "__main__":
    main()
