"""Pure-Python exact integer kernels.

Reference implementation of the routines in ``_ckernels.pyx``.  Every
function takes matrices as lists of rows of Python ints and never rounds.
"""

from fractions import Fraction
from math import gcd, lcm

__all__ = ["rank", "nullspace", "rank_profile", "scaled_inverse", "combine", "bilinear_rows"]


def _primitive(row):
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def rank(matrix):
    """Rank over Q of an integer matrix (fraction-free Bareiss elimination)."""
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    m = len(rows)
    r = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(r, m):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        prow = rows[r]
        for i in range(r + 1, m):
            row = rows[i]
            a = row[col]
            if a:
                for j in range(col + 1, ncols):
                    row[j] = (row[j] * p - a * prow[j]) // prev
            else:
                for j in range(col + 1, ncols):
                    row[j] = (row[j] * p) // prev
            row[col] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def nullspace(matrix, ncols=None):
    """Integer basis of {v : matrix @ v = 0}.

    Vectors are primitive.  The basis is the standard one attached to the
    reduced row echelon form: one vector per free column, with a positive
    entry in that column and zeros in the other free columns.
    """
    rows = [_primitive(list(r)) for r in matrix if any(r)]
    if ncols is None:
        if not matrix:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(matrix[0])
    pivots = []
    r = 0
    m = len(rows)
    for col in range(ncols):
        piv = None
        for i in range(r, m):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[col]
        for i in range(m):
            if i == r:
                continue
            row = rows[i]
            a = row[col]
            if a:
                g = gcd(p, a)
                pp, aa = p // g, a // g
                rows[i] = _primitive([pp * x - aa * y for x, y in zip(row, prow)])
        pivots.append(col)
        r += 1
        if r == m:
            break
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        # pivot rows: p_k x_{c_k} + sum_free a_kf x_f = 0
        lcm = 1
        for k, c in enumerate(pivots):
            if rows[k][f]:
                p = rows[k][c]
                lcm = lcm * abs(p) // gcd(lcm, abs(p))
        v = [0] * ncols
        v[f] = lcm
        for k, c in enumerate(pivots):
            a = rows[k][f]
            if a:
                v[c] = -a * lcm // rows[k][c]
        basis.append(_primitive(v))
    return basis


def rank_profile(x, plus, minus, mmax):
    """Ranks of x^m restricted to the coordinate subspaces ``plus``/``minus``.

    Returns two lists ``(rp, rm)`` of length ``mmax + 1`` with
    ``rp[m] = rank(x^m |_{span(e_i, i in plus)})``.  The image is carried
    forward one step at a time and re-reduced, which keeps entries small.
    """
    n = len(x)
    out = []
    for cols in (plus, minus):
        # image spanned by rows of `img` (as row vectors of length n)
        img = [[1 if i == c else 0 for i in range(n)] for c in cols]
        ranks = [len(cols)]
        for _ in range(mmax):
            if not img:
                ranks.append(0)
                continue
            img = [[sum(x[i][k] * v[k] for k in range(n) if v[k]) for i in range(n)] for v in img]
            img = _row_basis(img)
            ranks.append(len(img))
        out.append(ranks)
    return out[0], out[1]


def _row_basis(rows):
    rows = [_primitive(list(r)) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    m = len(rows)
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, m):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[col]
        for i in range(r + 1, m):
            row = rows[i]
            a = row[col]
            if a:
                g = gcd(p, a)
                rows[i] = _primitive([(p // g) * u - (a // g) * w for u, w in zip(row, prow)])
        basis.append(prow)
        r += 1
        if r == m:
            break
    return basis


def scaled_inverse(vectors):
    """Integer A and d > 0 minimal with A M = d I, M having the given columns."""
    n = len(vectors)
    aug = [[Fraction(vectors[c][r]) for c in range(n)] + [Fraction(int(r == k)) for k in range(n)] for r in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("vectors are linearly dependent")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [row[n:] for row in aug]
    d = 1
    for row in inv:
        for x in row:
            d = lcm(d, x.denominator)
    return [[int(x * d) for x in row] for row in inv], d


def combine(coef, mats):
    """sum_k coef[k] * mats[k] for square matrices."""
    n = len(mats[0])
    out = [[0] * n for _ in range(n)]
    for c, m in zip(coef, mats):
        if c:
            for i in range(n):
                ri = out[i]
                mi = m[i]
                for j in range(n):
                    if mi[j]:
                        ri[j] += c * mi[j]
    return out


def bilinear_rows(A, B, elems, pairs):
    """Nonzero rows [(A x_k B)_{ab} for each k] over (a, b) in pairs.

    Each x_k is sparse, a list of (i, j, value).
    """
    rows = []
    for a, b in pairs:
        Aa = A[a]
        Bb = B[b]
        row = [sum(v * Aa[i] * Bb[j] for i, j, v in ent) for ent in elems]
        if any(row):
            rows.append(row)
    return rows
