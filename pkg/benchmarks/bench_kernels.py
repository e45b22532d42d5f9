"""Compare the numpy and Cython kernels.

Micro benchmarks time the raw kernels on random matrices; the end-to-end
benchmark runs the full theorem catalog in a subprocess per backend.

    python3 benchmarks/bench_kernels.py [--repeat N] [--skip-e2e]
"""

import argparse
import os
import subprocess
import sys
import time
import timeit

import numpy as np

from hopfrad._backend import available_backends


def micro(kernels, repeat):
    rng = np.random.default_rng(0)
    cases = {
        "rref_modp 12x12 p=3": (lambda k, m=rng.integers(0, 3, (12, 12)): k.rref_modp(m.copy(), 3)),
        "rref_modp 40x64 p=2": (lambda k, m=rng.integers(0, 2, (40, 64)): k.rref_modp(m.copy(), 2)),
        "charpoly_modp 16x16 p=7": (lambda k, m=rng.integers(0, 7, (16, 16)): k.charpoly_modp(m.copy(), 7)),
        "charpoly_modp_batch 200x6x6 p=3": (lambda k, m=rng.integers(0, 3, (200, 6, 6)): k.charpoly_modp_batch(m.copy(), 3)),
    }
    rows = []
    for name, fn in cases.items():
        times = {}
        for bname, k in kernels.items():
            number = 20
            times[bname] = min(timeit.repeat(lambda: fn(k), number=number, repeat=repeat)) / number
        rows.append((name, times))
    return rows


def end_to_end(backend):
    env = dict(os.environ)
    if backend == "python":
        env["HOPFRAD_PURE_PYTHON"] = "1"
    else:
        env.pop("HOPFRAD_PURE_PYTHON", None)
    code = "import hopfrad; from hopfrad.theorems import run_all; assert hopfrad.BACKEND == %r; run_all()" % backend
    t0 = time.perf_counter()
    subprocess.run([sys.executable, "-c", code], env=env, check=True)
    return time.perf_counter() - t0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-e2e", action="store_true")
    args = ap.parse_args(argv)

    kernels = available_backends()
    names = sorted(kernels)
    print(f"{'kernel':36s}" + "".join(f"{n:>14s}" for n in names) + ("      speedup" if len(names) == 2 else ""))
    for case, times in micro(kernels, args.repeat):
        line = f"{case:36s}" + "".join(f"{times[n] * 1e6:11.1f} us" for n in names)
        if len(names) == 2:
            line += f"{times['python'] / times['cython']:12.1f}x"
        print(line)
    if not args.skip_e2e:
        print()
        for n in names:
            print(f"run_all with {n:8s} {end_to_end(n):8.2f} s")


if __name__ == "__main__":
    main()
