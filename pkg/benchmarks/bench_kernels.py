"""Benchmark: compiled extension vs pure-Python kernels.

Times the hot kernels on representative workloads (Hochschild-differential
sized integer rank, mod-p rank, brute-force point counts) plus one
end-to-end Hochschild run in each mode.

    python benchmarks/bench_kernels.py
"""

import random
import subprocess
import sys
import time

import ncsurf._kernels_py as pure

try:
    import ncsurf._kernels_cy as compiled
except ImportError:
    compiled = None


def timeit(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def fresh_matrix(rng, nr, nc, height=9):
    return [[rng.randint(-height, height) for _ in range(nc)] for _ in range(nr)]


def main():
    rng = random.Random(1)
    m = fresh_matrix(rng, 128, 80)
    cubic_terms = [
        (a, 2 - a, b, 2 - b, rng.randint(-5, 5)) for a in range(3) for b in range(3)
    ]
    plane_terms = []
    for a in range(4):
        for b in range(4 - a):
            plane_terms.append((a, b, 3 - a - b, rng.randint(-5, 5)))

    rows = []
    cases = [
        ("bareiss_rank 128x80", "bareiss_rank", ([list(r) for r in m],)),
        ("modp_rank 128x80 p=503", "modp_rank", ([list(r) for r in m], 503)),
        ("count_points_p2 p=503", "count_points_p2", (plane_terms, 503)),
        ("count_points_p1p1 p=503", "count_points_p1p1", (cubic_terms, 503)),
    ]
    print(f"{'kernel':<28}{'pure':>10}{'compiled':>10}{'speedup':>9}")
    for label, name, args in cases:
        tp = timeit(getattr(pure, name), *args)
        if compiled is not None:
            tc = timeit(getattr(compiled, name), *args)
            print(f"{label:<28}{tp:>9.4f}s{tc:>9.4f}s{tp / tc:>8.1f}x")
        else:
            print(f"{label:<28}{tp:>9.4f}s{'-':>10}{'-':>9}")

    code = (
        "import time; t0=time.time(); "
        "from ncsurf.pipeline import run_preset; "
        "run_preset('commutative-quadric'); "
        "print('%.3f' % (time.time()-t0))"
    )
    import os

    env = dict(os.environ)
    env.pop("NCSURF_PURE", None)
    t_fast = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    ).stdout.strip()
    env["NCSURF_PURE"] = "1"
    t_pure = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    ).stdout.strip()
    print(f"{'end-to-end quadric report':<28}{t_pure:>9}s{t_fast:>9}s")


if __name__ == "__main__":
    main()
