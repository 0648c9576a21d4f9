"""Compare the compiled and pure-Python counting kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import sys
import timeit

from kdistant import _pykernels

try:
    from kdistant import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    ("profile_count matchings n=20 k=10", "profile_count", (20, 10, True)),
    ("profile_count partitions n=24 k=6", "profile_count", (24, 6, False)),
    ("profile_count partitions n=40 k=3", "profile_count", (40, 3, False)),
    ("histogram partitions n=10", "crossing_distance_histogram", (10, False)),
    ("histogram matchings n=12", "crossing_distance_histogram", (12, True)),
]


def best_of(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the Python kernel is timed")
    print(f"{'case':40} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, name, call in CASES:
        py = best_of(getattr(_pykernels, name), call, args.repeat)
        if _ckernels is None:
            print(f"{label:40} {py:10.4f}")
            continue
        fn = getattr(_ckernels, name)
        assert fn(*call) == getattr(_pykernels, name)(*call), label
        cy = best_of(fn, call, args.repeat)
        print(f"{label:40} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
