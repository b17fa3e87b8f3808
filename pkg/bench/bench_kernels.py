"""Compare the compiled and pure-Python elimination kernels.

    python bench/bench_kernels.py [--sizes 10 25 50 100 200] [--repeat 3]

Matrices are intersection matrices of random negative-definite trees
(Euler numbers in [-6, -2], a few extra arrows), the workload the
fibredness engine actually sees.
"""
import argparse
import random
import timeit

from plumblink import _pykernels

try:
    from plumblink import _ckernels
except ImportError:
    _ckernels = None


def tree_matrix(rng, n):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = rng.randint(-6, -2)
    for i in range(1, n):
        j = rng.randrange(i)
        m[i][j] += 1
        m[j][i] += 1
    return m


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[10, 25, 50, 100, 200])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled kernels not built; only timing the fallback")
    rng = random.Random(0)
    print(f"{'n':>5} {'op':>8} {'python [s]':>12} {'cython [s]':>12} {'speedup':>8}")
    for n in args.sizes:
        m = tree_matrix(rng, n)
        rhs = [rng.randint(-5, 5) for _ in range(n)]
        for op, call in [
            ("det", lambda k: k.det(m)),
            ("minors", lambda k: k.leading_minors(m)),
            ("solve", lambda k: k.solve_numerators(m, rhs)),
        ]:
            py = min(timeit.repeat(lambda: call(_pykernels), number=1, repeat=args.repeat))
            if _ckernels is None:
                print(f"{n:>5} {op:>8} {py:>12.4f} {'-':>12} {'-':>8}")
                continue
            assert call(_ckernels) == call(_pykernels)
            cy = min(timeit.repeat(lambda: call(_ckernels), number=1, repeat=args.repeat))
            print(f"{n:>5} {op:>8} {py:>12.4f} {cy:>12.4f} {py / cy:>7.2f}x")


if __name__ == "__main__":
    main()
