"""Compare the compiled and pure-Python cover kernels on hard instances.

    python benchmarks/bench_kernels.py --sizes 12 14 16 18 20 --distractors 10

Prints median seconds per call for full brevity and greedy on each backend,
and the speed-up of the compiled kernels where they are available.
"""

import argparse
import statistics
import time

from refex import _core
from refex.describe import full_brevity, greedy_heuristic
from refex.synthetic import hard_instance


def median_seconds(fn, repeats, inner=1):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        for _ in range(inner):
            fn()
        times.append((time.perf_counter() - t0) / inner)
    return statistics.median(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[12, 14, 16, 18, 20])
    parser.add_argument("--distractors", type=int, default=10)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    backends = sorted(_core.BACKENDS)
    print(f"backends: {', '.join(backends)} (default {_core.BACKEND})")
    header = f"{'props':>5}  {'algorithm':<12}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speed-up':>10}"
    print(header)
    for n in args.sizes:
        inst = hard_instance(n, args.distractors)
        for name, fn, inner in (
            ("full-brevity", lambda b: full_brevity("r", inst.context, inst.kb, backend=b), 1),
            ("greedy", lambda b: greedy_heuristic("r", inst.context, inst.kb, backend=b), 50),
        ):
            times = {b: median_seconds(lambda: fn(b), args.repeats, inner) for b in backends}
            row = f"{n:>5}  {name:<12}" + "".join(f"{times[b]:>12.2e}" for b in backends)
            if len(backends) > 1:
                row += f"{times['python'] / times['cython']:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
