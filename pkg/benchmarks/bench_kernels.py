"""Compare the compiled and pure-Python kernels on the workloads the sweeps run.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time
from math import gcd

from farey_surgery import _pycore

try:
    from farey_surgery import _core
except ImportError:
    _core = None


def _pairs(mod, count, radius, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        t = (0, 1, 1, 1, 1, 0)
        for _ in range(rng.randint(0, 2 * radius)):
            t = mod.neighbor(t, rng.randrange(3))
        u = t
        for _ in range(rng.randint(0, radius)):
            u = mod.neighbor(u, rng.randrange(3))
        out.append((t, u))
    return out


def workloads(mod, pairs, slopes):
    base = (0, 1, 1, 1, 1, 0)

    def walk():
        for t1, t2 in pairs:
            mod.geodesic_distance(t1, t2)

    def bfs():
        for t1, t2 in pairs[:1000]:
            mod.bfs_distance(t1, t2, 10)

    def ball():
        mod.bfs_ball(base, 12)

    def meridian():
        for p, q in slopes:
            mod.walk_to_slope(base, p, q)

    def qsum():
        for p, q in slopes:
            mod.quotient_sum(p, q)

    def long_walk():
        mod.walk_to_slope(base, 200_000, 1)

    return {
        "geodesic_distance x10k": walk,
        "bfs_distance x1k (r<=10)": bfs,
        "bfs_ball r=12": ball,
        "walk_to_slope x10k": meridian,
        "quotient_sum x10k": qsum,
        "walk_to_slope 200000/1": long_walk,
    }


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    pairs = _pairs(_pycore, 10_000, 10, args.seed)
    rng = random.Random(args.seed)
    slopes = []
    while len(slopes) < 10_000:
        p, q = rng.randint(0, 10**6), rng.randint(1, 10**6)
        if gcd(p, q) == 1 and not (q == 1 and p in (0, 1)):
            slopes.append((p, q))

    backends = [("python", _pycore)] + ([("cython", _core)] if _core else [])
    results = {name: {k: best_of(f, args.repeat) for k, f in workloads(mod, pairs, slopes).items()}
               for name, mod in backends}

    print(f"{'workload':<28}" + "".join(f"{n:>12}" for n, _ in backends) + "   speedup")
    for k in results["python"]:
        row = f"{k:<28}" + "".join(f"{results[n][k] * 1e3:>10.1f}ms" for n, _ in backends)
        if _core:
            row += f"   {results['python'][k] / results['cython'][k]:>6.1f}x"
        print(row)
    if not _core:
        print("compiled core not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
