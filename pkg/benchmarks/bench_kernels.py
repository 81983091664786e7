"""Time the compiled and pure-Python lattice kernels on the same Nahm sums.

    python3 benchmarks/bench_kernels.py [--orders 60 100 150] [--repeat 3]

Each row reports the best-of-``repeat`` wall time per backend, the speedup,
and whether the two series agree exactly.
"""

from __future__ import annotations

import argparse
import time

from qvoa import _backend
from qvoa.nahm import build_nahm_form, nahm_series

CASES = [(1, 3), (2, 1), (2, 2), (3, 1)]


def best_time(fn, repeat: int):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--orders", type=int, nargs="+", default=[60, 100, 150])
    p.add_argument("--repeat", type=int, default=3)
    a = p.parse_args(argv)

    backends = _backend.available_backends()
    if "cython" not in backends:
        print("compiled kernels are not built; only the python backend is available")
    print(f"{'n':>2} {'k':>2} {'order':>5} " + " ".join(f"{b:>10}" for b in backends) + "   speedup  agree")
    for n, k in CASES:
        form = build_nahm_form(n, k)
        for order in a.orders:
            times, series = [], []
            for b in backends:
                t, s = best_time(lambda: nahm_series(form, order, backend=b), a.repeat)
                times.append(t)
                series.append(s)
            speed = f"{times[-1] / times[0]:8.1f}x" if len(times) > 1 else "       -"
            agree = all(s == series[0] for s in series)
            print(f"{n:>2} {k:>2} {order:>5} " + " ".join(f"{t:9.4f}s" for t in times) + f"  {speed}  {agree}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
