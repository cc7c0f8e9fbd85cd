"""Compare the compiled and pure-Python linear algebra kernels.

The compiled side is timed through ``korbits.kernels``, the dispatcher the
library uses, so int64 overflows count with their big-integer fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Times rank, nullspace and rank_profile on seeded random integer matrices of
the sizes met when computing conormal spaces, plus one end-to-end run of
Phi_B over all orbits of Sp(6,R) with each backend.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from korbits import _pykernels, kernels

try:
    from korbits import _ckernels
except ImportError:
    _ckernels = None


def overflows(op, mats):
    n = 0
    for m in mats:
        try:
            call(_ckernels, op, m)
        except OverflowError:
            n += 1
    return n


def random_matrix(rng, rows, cols, density=0.4, bound=3):
    return [[rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]


def nilpotent(rng, n):
    """Strictly upper triangular, conjugated by a unimodular shear."""
    x = [[rng.randint(-2, 2) if j > i else 0 for j in range(n)] for i in range(n)]
    k = rng.randrange(n - 1)
    # conjugate by I + E_{k+1,k}: rows then columns
    x[k + 1] = [a + b for a, b in zip(x[k + 1], x[k])]
    for row in x:
        row[k] -= row[k + 1]
    return x


def cases(seed):
    rng = random.Random(seed)
    yield "rank 12x12", "rank", [random_matrix(rng, 12, 12) for _ in range(20)]
    yield "rank 30x40", "rank", [random_matrix(rng, 30, 40) for _ in range(10)]
    yield "nullspace 20x36", "nullspace", [random_matrix(rng, 20, 36, 0.2) for _ in range(10)]
    yield "nullspace 40x60", "nullspace", [random_matrix(rng, 40, 60, 0.15) for _ in range(5)]
    yield "rank_profile 8", "rank_profile", [nilpotent(rng, 8) for _ in range(20)]
    yield "rank_profile 12", "rank_profile", [nilpotent(rng, 12) for _ in range(10)]
    yield "scaled_inverse 8", "scaled_inverse", [unimodular(rng, 8) for _ in range(20)]
    yield "combine 12 x 20", "combine", [[random_matrix(rng, 12, 12, 0.1) for _ in range(20)] for _ in range(10)]
    yield "bilinear_rows 12", "bilinear_rows", [bilinear_case(rng, 12) for _ in range(10)]


def unimodular(rng, n):
    """Columns of a random product of elementary integer shears."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-1, 1))
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


def bilinear_case(rng, n):
    A = unimodular(rng, n)
    B = unimodular(rng, n)
    elems = [[(rng.randrange(n), rng.randrange(n), rng.choice((-1, 1))) for _ in range(2)] for _ in range(n * n // 2)]
    pairs = [(a, b) for a in range(n) for b in range(a)]
    return A, B, elems, pairs


def call(mod, op, m):
    if op == "rank":
        return mod.rank(m)
    if op == "nullspace":
        return mod.nullspace(m, len(m[0]))
    if op == "scaled_inverse":
        return mod.scaled_inverse(m)
    if op == "combine":
        return mod.combine(list(range(-10, 10)), m)
    if op == "bilinear_rows":
        return mod.bilinear_rows(*m)
    n = len(m)
    return mod.rank_profile(m, list(range(n // 2)), list(range(n // 2, n)), n)


def end_to_end(pure: bool) -> float:
    env = dict(os.environ, KORBITS_PURE_PYTHON="1" if pure else "0")
    code = (
        "import time; from korbits.pairs import SymmetricPair; from korbits.clans import enumerate_clans;"
        "from korbits.moment import phi_B; p = SymmetricPair.parse('spr:3'); t = time.perf_counter();"
        "[phi_B(p, c) for c in enumerate_clans(p)]; print(time.perf_counter() - t)"
    )
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(res.stdout.strip())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available")
    print(f"{'case':<18}{'python ms':>12}{'cython ms':>12}{'speedup':>10}  fallbacks")
    for name, op, mats in cases(args.seed):
        py = min(timeit.repeat(lambda: [call(_pykernels, op, m) for m in mats], number=1, repeat=args.repeat))
        line = f"{name:<18}{py * 1e3:>12.2f}"
        if _ckernels is not None:
            for m in mats:
                assert call(_pykernels, op, m) == call(kernels, op, m), name
            cy = min(timeit.repeat(lambda: [call(kernels, op, m) for m in mats], number=1, repeat=args.repeat))
            line += f"{cy * 1e3:>12.2f}{py / cy:>9.1f}x  {overflows(op, mats)}/{len(mats)}"
        print(line)
    py = end_to_end(True)
    cy = end_to_end(False)
    print(f"{'Phi_B on spr:3':<18}{py * 1e3:>12.2f}{cy * 1e3:>12.2f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
