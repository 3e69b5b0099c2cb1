"""Compare the compiled integer kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload runs on both backends, checks that the outputs agree and
prints the best wall time of ``--repeat`` runs.
"""

import argparse
import random
import sys
import timeit

from kronlift import _pykernels

try:
    from kronlift import _ckernels
except ImportError:
    _ckernels = None


def random_matrices(count, rows, cols, height, seed):
    rng = random.Random(seed)
    return [[[rng.randint(-height, height) for _ in range(cols)] for _ in range(rows)] for _ in range(count)]


def workloads():
    hnf_mats = random_matrices(2000, 4, 6, 50, 1)
    ker_mats = random_matrices(2000, 3, 5, 20, 2)
    return [
        ("hnf_with_transform 4x6 x2000", lambda k: [k.hnf_with_transform(m, 6) for m in hnf_mats]),
        ("kernel_vector 3x5 x2000", lambda k: [k.kernel_vector(m, 5) for m in ker_mats]),
        ("torus_lift_sweep n=2 bound=5", lambda k: k.torus_lift_sweep(1, 2, 5)),
        ("torus_lift_sweep n=3 bound=3", lambda k: k.torus_lift_sweep(2, 3, 3)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    print(f"{'workload':34} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in workloads():
        if fn(_pykernels) != fn(_ckernels):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        tp = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:34} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
