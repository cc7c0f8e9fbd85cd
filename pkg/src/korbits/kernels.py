"""Exact integer linear algebra with an optional compiled core.

The Cython module ``_ckernels`` works in checked int64 arithmetic; when it
is missing, or when an overflow is detected, the big-integer routines in
``_pykernels`` are used.  Set ``KORBITS_PURE_PYTHON=1`` to disable the
compiled core entirely.
"""

import os

from . import _pykernels

_c = None
if os.environ.get("KORBITS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _c
    except ImportError:  # extension not built
        _c = None

BACKEND = "cython" if _c is not None else "python"

__all__ = ["BACKEND", "rank", "nullspace", "rank_profile", "scaled_inverse", "combine", "bilinear_rows"]


def rank(matrix):
    if _c is not None:
        try:
            return _c.rank(matrix)
        except OverflowError:
            pass
    return _pykernels.rank(matrix)


def nullspace(matrix, ncols=None):
    if _c is not None:
        try:
            return _c.nullspace(matrix, ncols)
        except OverflowError:
            pass
    return _pykernels.nullspace(matrix, ncols)


def rank_profile(x, plus, minus, mmax):
    if _c is not None:
        try:
            return _c.rank_profile(x, plus, minus, mmax)
        except OverflowError:
            pass
    return _pykernels.rank_profile(x, plus, minus, mmax)


def scaled_inverse(vectors):
    if _c is not None:
        try:
            return _c.scaled_inverse(vectors)
        except OverflowError:
            pass
    return _pykernels.scaled_inverse(vectors)


def combine(coef, mats):
    if _c is not None:
        try:
            return _c.combine(coef, mats)
        except OverflowError:
            pass
    return _pykernels.combine(coef, mats)


def bilinear_rows(A, B, elems, pairs):
    if _c is not None:
        try:
            return _c.bilinear_rows(A, B, elems, pairs)
        except OverflowError:
            pass
    return _pykernels.bilinear_rows(A, B, elems, pairs)
