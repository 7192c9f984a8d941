"""Compare the numba and pure-numpy kernel backends on representative workloads.

Each backend runs in its own interpreter because the choice is made at
import time from QMOCK_KERNELS. Reported times are the best of --repeat runs,
after one warm-up run (which also absorbs numba compilation).

    python3 benchmarks/bench_kernels.py --repeat 5
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
import qmock
from qmock import builders as b, kernels, snsum

repeat = int(sys.argv[1])
rng = np.random.default_rng(0)
x = rng.integers(-9, 10, 4000)
y = rng.integers(-9, 10, 4000)
grid = rng.integers(-9, 10, (60, 400))

work = {
    "convolve 4000": lambda: kernels.convolve(x, y, 3999),
    "divide_binomial 60x400": lambda: [kernels.divide_binomial(grid, 1, 1, k) for k in range(1, 40)],
    "mul_binomial 60x400": lambda: [kernels.mul_binomial(grid, 1, 0, 0, -1, 1, k) for k in range(1, 40)],
    "two-variable omega lhs 60x120": lambda: b.build_thm1_omega_lhs(60, 120),
    "two-variable nu lhs 60x120": lambda: b.build_thm1_nu_lhs(60, 120),
    "omega(q) to order 2000": lambda: b.build_omega(2000),
    "S_n(2), n=60": lambda: (snsum._s.cache_clear(), snsum.term_poly.cache_clear(), snsum.s_poly(60, 2)),
}
out = {"backend": qmock.BACKEND, "times": {}}
for name, fn in work.items():
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    out["times"][name] = best
print(json.dumps(out))
"""


def run(backend, repeat):
    env = dict(os.environ, QMOCK_KERNELS=backend)
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast = run("numba", args.repeat)
    slow = run("numpy", args.repeat)
    if fast["backend"] != "numba":
        print("numba is not importable; both columns use numpy", file=sys.stderr)
    print(f"{'workload':34} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for name, t in fast["times"].items():
        s = slow["times"][name]
        print(f"{name:34} {t * 1e3:10.2f} {s * 1e3:10.2f} {s / t:8.1f}x")


if __name__ == "__main__":
    main()
