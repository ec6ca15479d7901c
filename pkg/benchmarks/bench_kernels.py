"""Compare the compiled and pure-Python census kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends must agree; the script exits nonzero if they do not.
"""

import argparse
import sys
import timeit

import numpy as np

from knotsurgery import _kernels_py

try:
    from knotsurgery import _kernels
except ImportError:
    _kernels = None

CASES = [
    ("count_slice", (3, 120)),
    ("count_slice", (4, 60)),
    ("enumerate_slice", (3, 120)),
    ("enumerate_slice", (4, 50)),
    ("count_compositions", (22, 6)),
]


def _same(a, b):
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return 1

    print(f"{'kernel':<20}{'args':<12}{'python s':>10}{'cython s':>10}{'speedup':>10}")
    ok = True
    for name, a in CASES:
        py, cy = getattr(_kernels_py, name), getattr(_kernels, name)
        ok &= _same(py(*a), cy(*a))
        t_py = min(timeit.repeat(lambda: py(*a), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: cy(*a), number=1, repeat=args.repeat))
        print(f"{name:<20}{str(a):<12}{t_py:>10.4f}{t_cy:>10.4f}{t_py / t_cy:>10.0f}x")
    print("backends agree" if ok else "BACKENDS DISAGREE")
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
