#!/usr/bin/env python3
"""Benchmark the compiled wall-scan kernel against the pure-Python fallback.

Times the full-congruence interior enumeration (the hot loop of the
chamber scan) per backend, both over a range of n and at single large n.

    python benchmarks/bench_backends.py [--max-range 300] [--spots 400 600 800]
"""

import argparse
import time

from k3invol import _scan_py

try:
    from k3invol import _speedups
except ImportError:
    _speedups = None


def _time(fn, *args, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_range(mod, n_max):
    t0 = time.perf_counter()
    for n in range(2, n_max + 1):
        mod.interior_solutions(n, True, False)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-range", type=int, default=300)
    ap.add_argument("--spots", type=int, nargs="*", default=[400, 600, 800])
    args = ap.parse_args()

    backends = [("python", _scan_py)]
    if _speedups is not None:
        backends.append(("compiled", _speedups))
    else:
        print("compiled kernel not built; benchmarking the fallback only")

    print(f"{'benchmark':<28}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    rows = [(f"scan n=2..{args.max_range}", [bench_range(m, args.max_range) for _, m in backends])]
    for n in args.spots:
        rows.append(
            (
                f"single n={n}",
                [_time(m.interior_solutions, n, True, False, repeat=2) for _, m in backends],
            )
        )
    for label, times in rows:
        line = f"{label:<28}" + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2 and times[1] > 0:
            line += f"{times[0] / times[1]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
