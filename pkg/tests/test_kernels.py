import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from korbits import _pykernels, kernels

try:
    from korbits import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

small = st.integers(-4, 4)


def matrices(max_rows=7, max_cols=7):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


def fraction_rank(m):
    rows = [[Fraction(x) for x in r] for r in m]
    r = 0
    for c in range(len(rows[0])):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


@given(matrices())
def test_rank_matches_fraction_elimination(m):
    assert _pykernels.rank(m) == fraction_rank(m)
    assert kernels.rank(m) == fraction_rank(m)


@given(matrices())
def test_nullspace_is_kernel_of_right_size(m):
    basis = kernels.nullspace(m)
    n = len(m[0])
    assert len(basis) == n - fraction_rank(m)
    for v in basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    if basis:
        assert fraction_rank(basis) == len(basis)


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
@given(matrices())
def test_compiled_matches_python(m):
    assert _ckernels.rank(m) == _pykernels.rank(m)
    assert _ckernels.nullspace(m) == _pykernels.nullspace(m)


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_compiled_matches_python_square(m):
    n = len(m)
    strict = [[x if j > i else 0 for j, x in enumerate(row)] for i, row in enumerate(m)]
    half = list(range(n // 2))
    rest = list(range(n // 2, n))
    assert _ckernels.rank_profile(strict, half, rest, n) == _pykernels.rank_profile(strict, half, rest, n)
    coef = [row[0] for row in m]
    assert _ckernels.combine(coef, [m] * n) == _pykernels.combine(coef, [m] * n)
    if fraction_rank(m) == n:
        assert _ckernels.scaled_inverse(m) == _pykernels.scaled_inverse(m)
    elems = [[(i, (i + 1) % n, row[-1])] for i, row in enumerate(m)]
    pairs = [(a, b) for a in range(n) for b in range(n)]
    assert _ckernels.bilinear_rows(m, m, elems, pairs) == _pykernels.bilinear_rows(m, m, elems, pairs)


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_scaled_inverse(m):
    n = len(m)
    if fraction_rank(m) < n:
        with pytest.raises(ZeroDivisionError):
            kernels.scaled_inverse(m)
        return
    A, d = kernels.scaled_inverse(m)
    # columns of M are the given vectors
    for i in range(n):
        for j in range(n):
            assert sum(A[i][k] * m[j][k] for k in range(n)) == (d if i == j else 0)


def test_overflow_falls_back_to_big_integers():
    big = 2**40
    m = [[big, 1, 0], [1, big, 1], [0, 1, big]]
    if _ckernels is not None:
        with pytest.raises(OverflowError):
            _ckernels.scaled_inverse(m)
    A, d = kernels.scaled_inverse(m)
    assert (A, d) == _pykernels.scaled_inverse(m)
    assert kernels.rank([[big * big, 1], [1, 0]]) == 2


def test_rank_profile_of_jordan_block():
    n = 4
    x = [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)]
    rp, rm = kernels.rank_profile(x, [0, 2], [1, 3], n)
    # x: e3 -> e2 -> e1 -> e0 -> 0
    assert rp == [2, 1, 1, 0, 0]
    assert rm == [2, 2, 1, 1, 0]


def test_pure_python_switch():
    env = dict(os.environ, KORBITS_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from korbits import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
