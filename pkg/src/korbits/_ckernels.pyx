# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 versions of the exact kernels.

Arithmetic is checked; any overflow raises OverflowError so the caller can
retry with the big-integer implementation in ``_pykernels``.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    #include <stdint.h>
    static inline int ko_mul(int64_t a, int64_t b, int64_t *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int ko_sub(int64_t a, int64_t b, int64_t *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int ko_add(int64_t a, int64_t b, int64_t *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int ko_mul(int64_t a, int64_t b, int64_t *r) nogil
    int ko_sub(int64_t a, int64_t b, int64_t *r) nogil
    int ko_add(int64_t a, int64_t b, int64_t *r) nogil


cdef inline int64_t _abs(int64_t a) nogil:
    return -a if a < 0 else a


cdef int64_t _gcd(int64_t a, int64_t b) nogil:
    cdef int64_t t
    a = _abs(a)
    b = _abs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int64_t* _load(object matrix, Py_ssize_t *m, Py_ssize_t *n) except NULL:
    cdef Py_ssize_t rows = len(matrix)
    cdef Py_ssize_t cols = len(matrix[0]) if rows else 0
    cdef int64_t *a = <int64_t*> malloc((rows * cols + 1) * sizeof(int64_t))
    cdef Py_ssize_t i, j
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(rows):
            row = matrix[i]
            for j in range(cols):
                a[i * cols + j] = row[j]
    except OverflowError:
        free(a)
        raise
    m[0] = rows
    n[0] = cols
    return a


cdef int _make_primitive(int64_t *row, Py_ssize_t n) nogil:
    cdef int64_t g = 0
    cdef Py_ssize_t j
    for j in range(n):
        if row[j]:
            g = _gcd(g, row[j])
            if g == 1:
                return 0
    if g > 1:
        for j in range(n):
            row[j] = row[j] // g
    return 0


cdef int _combine(int64_t *dst, int64_t *piv, Py_ssize_t n, Py_ssize_t col) nogil:
    # dst <- (p/g) dst - (a/g) piv, then primitive; returns 1 on overflow
    cdef int64_t p = piv[col]
    cdef int64_t a = dst[col]
    cdef int64_t g = _gcd(p, a)
    cdef int64_t pp = p // g
    cdef int64_t aa = a // g
    cdef int64_t x, y
    cdef Py_ssize_t j
    for j in range(n):
        if ko_mul(pp, dst[j], &x):
            return 1
        if ko_mul(aa, piv[j], &y):
            return 1
        if ko_sub(x, y, &dst[j]):
            return 1
    _make_primitive(dst, n)
    return 0


cdef Py_ssize_t _echelon(int64_t *a, Py_ssize_t m, Py_ssize_t n, Py_ssize_t *pivots,
                         bint full) except -1:
    cdef Py_ssize_t r = 0, col, i, j, piv
    cdef int64_t t
    for i in range(m):
        _make_primitive(a + i * n, n)
    for col in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i * n + col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(n):
                t = a[r * n + j]
                a[r * n + j] = a[piv * n + j]
                a[piv * n + j] = t
        for i in range(0 if full else r + 1, m):
            if i == r or a[i * n + col] == 0:
                continue
            if _combine(a + i * n, a + r * n, n, col):
                raise OverflowError("int64 overflow in elimination")
        pivots[r] = col
        r += 1
    return r


def rank(matrix):
    """Rank over Q of an integer matrix."""
    cdef Py_ssize_t m, n, r
    if not len(matrix):
        return 0
    cdef int64_t *a = _load(matrix, &m, &n)
    cdef Py_ssize_t *piv = <Py_ssize_t*> malloc((n + 1) * sizeof(Py_ssize_t))
    try:
        r = _echelon(a, m, n, piv, False)
    finally:
        free(a)
        free(piv)
    return r


def nullspace(matrix, ncols=None):
    """Primitive integer basis of the right kernel (RREF normalisation)."""
    cdef Py_ssize_t m, n, r, k, f, c
    cdef int64_t lcm, p, g, v
    if not len(matrix):
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    cdef int64_t *a = _load(matrix, &m, &n)
    cdef Py_ssize_t *piv = <Py_ssize_t*> malloc((n + 1) * sizeof(Py_ssize_t))
    cdef int64_t *vec = <int64_t*> malloc((n + 1) * sizeof(int64_t))
    basis = []
    try:
        r = _echelon(a, m, n, piv, True)
        pset = set(piv[k] for k in range(r))
        for f in range(n):
            if f in pset:
                continue
            lcm = 1
            for k in range(r):
                if a[k * n + f]:
                    p = _abs(a[k * n + piv[k]])
                    g = _gcd(lcm, p)
                    if ko_mul(lcm // g, p, &lcm):
                        raise OverflowError("int64 overflow in nullspace")
            for c in range(n):
                vec[c] = 0
            vec[f] = lcm
            for k in range(r):
                if a[k * n + f]:
                    c = piv[k]
                    if ko_mul(-a[k * n + f], lcm // a[k * n + c], &v):
                        raise OverflowError("int64 overflow in nullspace")
                    vec[c] = v
            _make_primitive(vec, n)
            basis.append([vec[c] for c in range(n)])
    finally:
        free(a)
        free(piv)
        free(vec)
    return basis


def rank_profile(x, plus, minus, Py_ssize_t mmax):
    """Ranks of x^m on two coordinate subspaces, m = 0..mmax."""
    cdef Py_ssize_t n = len(x), nn, m, i, j, k, r, step, s
    cdef int64_t *xm = <int64_t*> malloc((n * n + 1) * sizeof(int64_t))
    cdef int64_t *img = <int64_t*> malloc((n * n + 1) * sizeof(int64_t))
    cdef int64_t *nxt = <int64_t*> malloc((n * n + 1) * sizeof(int64_t))
    cdef Py_ssize_t *piv = <Py_ssize_t*> malloc((n + 1) * sizeof(Py_ssize_t))
    cdef int64_t acc, t
    out = []
    try:
        for i in range(n):
            row = x[i]
            for j in range(n):
                xm[i * n + j] = row[j]
        for cols in (plus, minus):
            r = len(cols)
            for s in range(r):
                for j in range(n):
                    img[s * n + j] = 0
                img[s * n + <Py_ssize_t> cols[s]] = 1
            ranks = [r]
            for step in range(mmax):
                for s in range(r):
                    for i in range(n):
                        acc = 0
                        for k in range(n):
                            if img[s * n + k] and xm[i * n + k]:
                                if ko_mul(xm[i * n + k], img[s * n + k], &t):
                                    raise OverflowError("int64 overflow in rank_profile")
                                if ko_add(acc, t, &acc):
                                    raise OverflowError("int64 overflow in rank_profile")
                        nxt[s * n + i] = acc
                if r:
                    r = _echelon(nxt, r, n, piv, False)
                for s in range(r * n):
                    img[s] = nxt[s]
                ranks.append(r)
            out.append(ranks)
    finally:
        free(xm)
        free(img)
        free(nxt)
        free(piv)
    return out[0], out[1]


def scaled_inverse(vectors):
    """Integer A and minimal d > 0 with A M = d I, M having the given columns."""
    cdef Py_ssize_t n = len(vectors), w, r, i, c
    cdef int64_t d = 1, p, g, f, v
    w = 2 * n
    cdef int64_t *a = <int64_t*> malloc((n * w + 1) * sizeof(int64_t))
    cdef Py_ssize_t *piv = <Py_ssize_t*> malloc((w + 1) * sizeof(Py_ssize_t))
    if a == NULL or piv == NULL:
        free(a)
        free(piv)
        raise MemoryError()
    try:
        for r in range(n):
            for c in range(n):
                a[r * w + c] = vectors[c][r]
                a[r * w + n + c] = 1 if r == c else 0
        if _echelon(a, n, w, piv, True) < n or (n and piv[n - 1] != n - 1):
            raise ZeroDivisionError("vectors are linearly dependent")
        # rows are primitive, so row r of the inverse has denominator |a[r][r]|
        for r in range(n):
            p = _abs(a[r * w + r])
            g = _gcd(d, p)
            if ko_mul(d // g, p, &d):
                raise OverflowError("int64 overflow in scaled_inverse")
        out = []
        for r in range(n):
            p = a[r * w + r]
            f = d // p
            row = []
            for c in range(n):
                if ko_mul(a[r * w + n + c], f, &v):
                    raise OverflowError("int64 overflow in scaled_inverse")
                row.append(v)
            out.append(row)
    finally:
        free(a)
        free(piv)
    return out, d


def combine(coef, mats):
    """sum_k coef[k] * mats[k] for square matrices."""
    cdef Py_ssize_t n = len(mats[0]), i, j, k, nm = len(mats)
    cdef int64_t c, t, x
    cdef int64_t *acc = <int64_t*> malloc((n * n + 1) * sizeof(int64_t))
    if acc == NULL:
        raise MemoryError()
    try:
        for i in range(n * n):
            acc[i] = 0
        for k in range(nm):
            c = coef[k]
            if not c:
                continue
            m = mats[k]
            for i in range(n):
                mi = m[i]
                for j in range(n):
                    x = mi[j]
                    if x:
                        if ko_mul(c, x, &t) or ko_add(acc[i * n + j], t, &acc[i * n + j]):
                            raise OverflowError("int64 overflow in combine")
        out = [[acc[i * n + j] for j in range(n)] for i in range(n)]
    finally:
        free(acc)
    return out


def bilinear_rows(A, B, elems, pairs):
    """Nonzero rows [(A x_k B)_{ab} for each k] over (a, b) in pairs."""
    cdef Py_ssize_t ln = len(A), ne = len(elems), total = 0, k, e, q, np_ = len(pairs)
    cdef Py_ssize_t ia, ib
    cdef int64_t s, t, u
    cdef bint nonzero
    for ent in elems:
        total += len(ent)
    cdef Py_ssize_t *start = <Py_ssize_t*> malloc((ne + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *ei = <Py_ssize_t*> malloc((total + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *ej = <Py_ssize_t*> malloc((total + 1) * sizeof(Py_ssize_t))
    cdef int64_t *ev = <int64_t*> malloc((total + 1) * sizeof(int64_t))
    cdef int64_t *am = <int64_t*> malloc((ln * ln + 1) * sizeof(int64_t))
    cdef int64_t *bm = <int64_t*> malloc((ln * ln + 1) * sizeof(int64_t))
    cdef int64_t *row = <int64_t*> malloc((ne + 1) * sizeof(int64_t))
    rows = []
    try:
        if not (start and ei and ej and ev and am and bm and row):
            raise MemoryError()
        for ia in range(ln):
            for ib in range(ln):
                am[ia * ln + ib] = A[ia][ib]
                bm[ia * ln + ib] = B[ia][ib]
        q = 0
        for k in range(ne):
            start[k] = q
            for i, j, v in elems[k]:
                ei[q] = i
                ej[q] = j
                ev[q] = v
                q += 1
        start[ne] = q
        for e in range(np_):
            ia, ib = pairs[e]
            nonzero = False
            for k in range(ne):
                s = 0
                for q in range(start[k], start[k + 1]):
                    if ko_mul(ev[q], am[ia * ln + ei[q]], &t) or ko_mul(t, bm[ib * ln + ej[q]], &u) or ko_add(s, u, &s):
                        raise OverflowError("int64 overflow in bilinear_rows")
                row[k] = s
                if s:
                    nonzero = True
            if nonzero:
                rows.append([row[k] for k in range(ne)])
    finally:
        free(start)
        free(ei)
        free(ej)
        free(ev)
        free(am)
        free(bm)
        free(row)
    return rows
