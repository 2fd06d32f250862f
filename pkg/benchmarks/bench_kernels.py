"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--n 7] [--dim 3] [--repeat 3]
"""

import argparse
import time

from aomkit import _kernels_py
from aomkit.core_sign import all_keys
from aomkit.geometry import enumerate_covectors, random_arrangement

try:
    from aomkit import _kernels
except ImportError:
    _kernels = None


def _workloads(w, n):
    cands = list(all_keys(n))
    cp = [c[0] for c in cands]
    cm = [c[1] for c in cands]
    p, m = w["plus"], w["minus"]
    return {
        "stabilizer scan (3^n x |W|)": lambda k: k.stabilizer_scan(cp, cm, p, m, p, m, True),
        "composition closure": lambda k: k.first_composition_failure(p, m, p, m, p, m, False),
        "O4 elimination": lambda k: k.first_elimination_failure(p, m, True, True),
        "SE elimination": lambda k: k.first_elimination_failure(p, m, False, True),
        "Q(W) pair sums": lambda k: k.pair_sums(p, m, p, m, False),
    }


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--dim", type=int, default=3)
    ap.add_argument("--seed", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    arr = random_arrangement(args.seed, args.n, args.dim, kind="central")
    o = enumerate_covectors(arr)
    w = {"plus": o.plus, "minus": o.minus}
    print(f"central arrangement n={args.n} d={args.dim}: {len(o)} covectors")
    if _kernels is None:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'kernel':<30} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, job in _workloads(w, args.n).items():
        tp, rp = _time(lambda: job(_kernels_py), args.repeat)
        if _kernels is None:
            print(f"{name:<30} {tp:>9.4f}s {'-':>10} {'-':>8}")
            continue
        tc, rc = _time(lambda: job(_kernels), args.repeat)
        if rp != rc:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<30} {tp:>9.4f}s {tc:>9.4f}s {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
