"""Compare the compiled kernels against the pure-Python reference.

Run:  python3 benchmarks/bench_backends.py
"""
import time

import numpy as np

from linarr import _kernels
from linarr._kernels import _ref
from linarr.graphs import make_special
from linarr.oracle import pair_length_table, _pair_index
from linarr.randomness import replica_rng


def timeit(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(name, fast, slow, *args):
    tf, rf = timeit(fast, *args)
    ts, rs = timeit(slow, *args)
    agree = np.array_equal(np.asarray(rf), np.asarray(rs))
    print(f"{name:28s} native {tf * 1e3:9.2f} ms   python {ts * 1e3:9.2f} ms "
          f"  speedup {ts / tf:6.1f}x   agree={agree}")


def main():
    if _kernels.backend() != "native":
        print("compiled backend not available; nothing to compare")
        return

    n = 8
    g = make_special("linear_tree", n)
    table = pair_length_table(n)
    idx = _pair_index(n)
    rows = np.asarray(
        [idx[(u - 1, v - 1)] for u, v in sorted(g.edges)], dtype=np.int64
    )
    bench("distribution_from_table n=8",
          _kernels.distribution_from_table, _ref.distribution_from_table,
          table, rows, (n - 1) ** 2)

    g7 = make_special("star_tree", 7)
    eu, ev = g7.endpoint_arrays()
    bench("stream_distribution n=7",
          _kernels.stream_distribution, _ref.stream_distribution,
          7, np.asarray(eu, dtype=np.int64), np.asarray(ev, dtype=np.int64))

    n = 40
    rng = replica_rng(1, 0)
    from itertools import combinations
    pairs = list(combinations(range(n), 2))
    order = rng.permutation(len(pairs))
    pu = np.asarray([pairs[i][0] for i in order], dtype=np.int64)
    pv = np.asarray([pairs[i][1] for i in order], dtype=np.int64)
    bench("gnm_prefix_variances n=40",
          _kernels.gnm_prefix_variances, _ref.gnm_prefix_variances, n, pu, pv)

    T, n = 2000, 60
    codes = np.empty((T, n - 2), dtype=np.int64)
    perms = np.empty((T, n), dtype=np.int64)
    for i in range(T):
        r = replica_rng(2, i)
        codes[i] = r.integers(0, n, size=n - 2)
        perms[i] = r.permutation(n)
    bench(f"tree_draws_d T={T} n={n}",
          _kernels.tree_draws_d, _ref.tree_draws_d, codes, perms)

    g = make_special("complete", 24)
    eu, ev = g.endpoint_arrays()
    eu = np.asarray(eu, dtype=np.int64)
    ev = np.asarray(ev, dtype=np.int64)
    perms = np.empty((2000, 24), dtype=np.int64)
    for i in range(2000):
        perms[i] = replica_rng(3, i).permutation(24)
    bench("arrangements_d T=2000 n=24",
          _kernels.arrangements_d, _ref.arrangements_d, eu, ev, perms)


if __name__ == "__main__":
    main()
