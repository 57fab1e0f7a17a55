"""Compare the compiled and pure-Python coefficient kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from binomdet import _kernels_py
from binomdet.combinatorics import Partition, count_triangular_sequences

try:
    from binomdet import _kernels
except ImportError:  # extension not built
    _kernels = None

CASES = [
    ((3, 3, 3), (2, 2, 1)),
    ((4, 4, 4), (2, 1, 0)),
    ((5, 5, 5, 5), (3, 2, 1, 0)),
    ((4, 4, 3, 3, 2), (2, 2, 1, 1, 0)),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'lambda':<18}{'mu':<16}{'|S|':>8}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for lam, mu in CASES:
        lam, mu = Partition(lam), Partition(mu)
        tp, cp = best_of(lambda: _kernels_py.coefficient_total(lam, mu), args.repeat)
        row = f"{str(lam):<18}{str(mu):<16}{count_triangular_sequences(lam):>8}{tp:>11.4f}"
        if _kernels is None:
            print(row + f"{'n/a':>11}{'':>9}")
            continue
        tc, cc = best_of(lambda: _kernels.coefficient_total(lam, mu), args.repeat)
        if cc != cp:
            raise SystemExit(f"kernel mismatch at {lam} {mu}: {cc} != {cp}")
        print(row + f"{tc:>11.4f}{tp / tc:>8.0f}x")


if __name__ == "__main__":
    main()
