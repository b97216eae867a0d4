"""Compare the numba and numpy paths of the hot kernels.

    python benchmarks/bench_kernels.py --sizes 6 7 8 --graphs 50

Both paths are checked for identical answers on every graph before timing
is reported.
"""

import argparse
import time

import numpy as np

from grundylab import kernels


def random_adjacency(n, p, rng):
    upper = np.triu(rng.random((n, n)) < p, 1)
    return (upper | upper.T).astype(np.uint8)


def timed(fn, mats):
    start = time.perf_counter()
    out = [fn(a) for a in mats]
    return time.perf_counter() - start, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[6, 7, 8])
    parser.add_argument("--graphs", type=int, default=50)
    parser.add_argument("--density", type=float, default=0.5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = np.random.default_rng(args.seed)

    # warm-up compiles the jitted kernels
    warm = random_adjacency(4, 0.5, rng)
    kernels.max_first_fit_jit(warm, 5)
    kernels.canonical_permutation_jit(warm)

    jit_ff = lambda a: int(kernels.max_first_fit_jit(a, a.shape[0] + 1))
    np_ff = kernels.max_first_fit_numpy

    def code(a, perm):
        return tuple(int(a[perm[i], perm[j]]) for j in range(len(perm)) for i in range(j))

    print(f"{'kernel':<22}{'n':>3}{'numba s':>12}{'numpy s':>12}{'ratio':>9}")
    for n in args.sizes:
        mats = [random_adjacency(n, args.density, rng) for _ in range(args.graphs)]
        t_jit, a = timed(jit_ff, mats)
        t_np, b = timed(np_ff, mats)
        assert a == b, "max_first_fit paths disagree"
        print(f"{'max_first_fit':<22}{n:>3}{t_jit:>12.4f}{t_np:>12.4f}{t_np / max(t_jit, 1e-9):>9.1f}")

        t_jit, a = timed(kernels.canonical_permutation_jit, mats)
        t_np, b = timed(kernels.canonical_permutation_numpy, mats)
        assert all(code(m, p) == code(m, q) for m, p, q in zip(mats, a, b)), "canonical paths disagree"
        print(f"{'canonical_permutation':<22}{n:>3}{t_jit:>12.4f}{t_np:>12.4f}{t_np / max(t_jit, 1e-9):>9.1f}")


if __name__ == "__main__":
    main()
