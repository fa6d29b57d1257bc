"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--n 1000000] [--repeat 3]
"""

import argparse
import importlib
import time

import numpy as np

from diffseq import _pykernels
from diffseq.coloring import PeriodicColoring
from diffseq.gapset import GapSet


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=10**6, help="prefix length for the DP")
    p.add_argument("--search-k", type=int, default=6, choices=range(2, 8),
                   help="k for the exhaustive search")
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()

    backends = {"python": _pykernels}
    try:
        backends["cython"] = importlib.import_module("diffseq._kernels")
    except ImportError:
        print("compiled kernels not built; timing the Python backend only")

    g = GapSet.powers_of_two()
    colors = PeriodicColoring.thue_morse(8, 1).materialize(args.n)
    gaps = np.array(g.members_up_to(args.n - 1), dtype=np.int64)
    k = args.search_k
    search_gaps = np.array(g.members_up_to(2**k), dtype=np.int64)
    # Delta(pow2, k) - 1 for small k: searching one past it is an exhaustive refutation
    n_search = {2: 2, 3: 6, 4: 10, 5: 16, 6: 24, 7: 34}[k]

    rows = []
    for name, mod in backends.items():
        dp = best_of(args.repeat, lambda: mod.chain_lengths(colors, gaps))
        gc = best_of(args.repeat, lambda: mod.max_gap_count(colors, gaps, 2))
        sr = best_of(args.repeat, lambda: mod.search(search_gaps, k, 2, n_search + 1,
                                                     np.zeros(1, np.uint8), 10**9))
        rows.append((name, dp, gc, sr))

    print(f"{'backend':<8} {'chain_lengths':>14} {'max_gap_count':>14} {'search':>10}")
    print(f"{'':<8} {'n=' + str(args.n):>14} {'n=' + str(args.n):>14} {'k=' + str(k):>10}")
    for name, dp, gc, sr in rows:
        print(f"{name:<8} {dp:>13.4f}s {gc:>13.4f}s {sr:>9.4f}s")
    if len(rows) == 2:
        (_, a, b, c), (_, x, y, z) = rows
        print(f"{'speedup':<8} {a / x:>13.1f}x {b / y:>13.1f}x {c / z:>9.1f}x")


if __name__ == "__main__":
    main()
