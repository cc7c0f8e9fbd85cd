"""Exact matrix models, representative flags, conormal spaces and Phi.

Models
------
``upq``   gl_{p+q}; tau = diag(1^p, (-1)^q); k block diagonal, s off-diagonal.
``spr``   sp_{2n} for the antidiagonal form w(e_a, e_{N-1-a}) = +1 (a < n);
          tau = diag(1^n, (-1)^n), so both eigenspaces are Lagrangian.
``sppq``  same form; tau = +1 on the first p and last p coordinates.
``cgl``   gl_n + gl_n as block diagonal matrices; theta swaps the blocks,
          k = {diag(X, X)}, s = {diag(X, -X)}.

All bases of k and s consist of sparse integer matrices, and a flag is an
ordered integer basis per component (one component, two for cgl) with
F_i spanned by the first i vectors.  The conormal space of a flag of a
given parabolic type is {x in s : x F_{k_j} in F_{k_{j-1}}} for the kept
steps k_j; it is the trace-form annihilator of the stabilising parabolic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import kernels
from .clans import Clan, clan_id, enumerate_clans, pair_list, project_to_P
from .pairs import CGL, GL, SP, SPPQ, SPR, UPQ, Parabolic, SymmetricPair
from .partitions import Partition, dominates, normalize
from .springer import richardson_partition
from .tableau import SignedTableau, all_tableaux, closure_leq, from_profile, half_orbit_dim, unsigned

Sparse = tuple[tuple[int, int, int], ...]  # entries (row, col, value)

DEFAULT_SEED = 20240601
DEFAULT_TRIALS = 8


class ModelError(RuntimeError):
    pass


class GenericityError(RuntimeError):
    pass


# ------------------------------------------------------------------ model


@dataclass(frozen=True)
class MatrixModel:
    pair: SymmetricPair
    size: int
    components: tuple[tuple[int, int], ...]  # (offset, length)
    k_basis: tuple[Sparse, ...]
    s_basis: tuple[Sparse, ...]
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    form: tuple[tuple[int, ...], ...] | None  # symplectic Gram matrix

    def tau(self, i: int) -> int:
        return 1 if i in self.plus else -1


def _dense(sp: Sparse, n: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    for i, j, v in sp:
        m[i][j] += v
    return m


def _sp_form(N: int) -> list[list[int]]:
    J = [[0] * N for _ in range(N)]
    for a in range(N):
        J[a][N - 1 - a] = 1 if a < N // 2 else -1
    return J


def _sp_basis(N: int) -> list[Sparse]:
    # x = J^{-1} S with S symmetric; J^{-1} = -J for this form
    J = _sp_form(N)
    out = []
    for a in range(N):
        for b in range(a, N):
            ent: dict[tuple[int, int], int] = {}
            for r, c in ((a, b), (b, a)) if a != b else ((a, a),):
                # (-J S)_{i,c} = -J[i][r] for the entry S[r][c]
                i = N - 1 - r
                ent[(i, c)] = ent.get((i, c), 0) - J[i][r]
            out.append(tuple(sorted((i, j, v) for (i, j), v in ent.items() if v)))
    return out


@lru_cache(maxsize=None)
def matrix_model(pair: SymmetricPair) -> MatrixModel:
    if pair.kind == CGL:
        n = pair.N
        k, s = [], []
        for i in range(n):
            for j in range(n):
                k.append(((i, j, 1), (n + i, n + j, 1)))
                s.append(((i, j, 1), (n + i, n + j, -1)))
        return MatrixModel(pair, 2 * n, ((0, n), (n, n)), tuple(k), tuple(s), tuple(range(n)), (), None)
    N = pair.N
    if pair.kind == UPQ:
        plus = tuple(range(pair.p))
        k, s = [], []
        for i in range(N):
            for j in range(N):
                (k if (i in plus) == (j in plus) else s).append(((i, j, 1),))
        minus = tuple(i for i in range(N) if i not in plus)
        return MatrixModel(pair, N, ((0, N),), tuple(k), tuple(s), plus, minus, None)
    if pair.kind == SPR:
        plus = tuple(range(pair.p))
    else:
        p = pair.p
        plus = tuple(range(p)) + tuple(range(N - p, N))
    minus = tuple(i for i in range(N) if i not in plus)
    pset = set(plus)
    k, s = [], []
    for x in _sp_basis(N):
        inside = [(i in pset) == (j in pset) for i, j, _ in x]
        if all(inside):
            k.append(x)
        elif not any(inside):
            s.append(x)
        else:
            raise ModelError("basis element mixes k and s")
    J = tuple(tuple(r) for r in _sp_form(N))
    return MatrixModel(pair, N, ((0, N),), tuple(k), tuple(s), plus, minus, J)


def check_model(model: MatrixModel) -> dict[str, int]:
    """Verify g = k + s, [k, s] in s and the expected dimensions."""
    pair = model.pair
    n = model.size
    kd = [_dense(x, n) for x in model.k_basis]
    sd = [_dense(x, n) for x in model.s_basis]
    tau = [model.tau(i) for i in range(n)] if pair.kind != CGL else None

    def theta(m):
        if pair.kind == CGL:
            h = n // 2
            out = [[0] * n for _ in range(n)]
            for i in range(h):
                for j in range(h):
                    out[i][j] = m[h + i][h + j]
                    out[h + i][h + j] = m[i][j]
            return out
        return [[tau[i] * m[i][j] * tau[j] for j in range(n)] for i in range(n)]

    for m in kd:
        if theta(m) != m:
            raise ModelError("k element not fixed by theta")
    for m in sd:
        if theta(m) != [[-v for v in r] for r in m]:
            raise ModelError("s element not negated by theta")
    if model.form is not None:
        J = model.form
        for m in kd + sd:
            lhs = [[sum(m[r][i] * J[r][j] for r in range(n)) + sum(J[i][r] * m[r][j] for r in range(n)) for j in range(n)] for i in range(n)]
            if any(any(r) for r in lhs):
                raise ModelError("element not in sp")
    flat = [[v for r in m for v in r] for m in kd + sd]
    if kernels.rank(flat) != len(flat):
        raise ModelError("k + s basis is dependent")
    # trace form nondegenerate on s
    gram = [[sum(a[i][j] * b[j][i] for i in range(n) for j in range(n)) for b in sd] for a in sd]
    if kernels.rank(gram) != len(sd):
        raise ModelError("trace form degenerate on s")
    return {"dim_k": len(kd), "dim_s": len(sd)}


# ------------------------------------------------------------------ flags


@dataclass(frozen=True)
class FlagRep:
    """Ordered bases (one tuple of vectors per component); F_i = span of the first i."""

    bases: tuple[tuple[tuple[int, ...], ...], ...]


def _unit(n: int, i: int) -> list[int]:
    v = [0] * n
    v[i] = 1
    return v


def _add(u, w, s=1):
    return [a + s * b for a, b in zip(u, w)]


def _scale(u, s):
    return [s * a for a in u]


def representative_flag(pair: SymmetricPair, c: Clan) -> FlagRep:
    """Explicit flag in the orbit labelled by c."""
    model = matrix_model(pair)
    M = model.size
    if pair.kind == CGL:
        n = pair.N
        F = tuple(tuple(_unit(M, i)) for i in range(n))
        G = tuple(tuple(_unit(M, n + w - 1)) for w in c)
        return FlagRep((F, G))
    N = pair.N
    vecs: list[list[int] | None] = [None] * N
    if pair.kind == UPQ:
        pl = list(model.plus)
        mi = list(model.minus)
        m = dict((i, j) for i, j in pair_list(c))
        for i, s in enumerate(c):
            if s == "+":
                vecs[i] = _unit(N, pl.pop(0))
            elif s == "-":
                vecs[i] = _unit(N, mi.pop(0))
            elif i in m:
                u, w = _unit(N, pl.pop(0)), _unit(N, mi.pop(0))
                vecs[i] = _add(u, w)
                vecs[m[i]] = _add(u, w, -1)
        return FlagRep((tuple(tuple(v) for v in vecs),))
    # type C: dual coordinate pairs (a, N-1-a), a < n
    n = N // 2
    J = model.form
    pset = set(model.plus)
    free_plus = [a for a in range(n) if a in pset]  # dual pairs whose first coordinate is in V+
    free_minus = [a for a in range(n) if a not in pset]

    def dual(a):
        return N - 1 - a

    def take(kind_plus: bool) -> int:
        lst = free_plus if kind_plus else free_minus
        if not lst:
            raise ModelError(f"clan {c} does not fit {pair}")
        return lst.pop(0)

    partner = {}
    for i, j in pair_list(c):
        partner[i] = j
        partner[j] = i
    done = set()
    for i in range(N):
        if i in done:
            continue
        im = N - 1 - i
        s = c[i]
        if isinstance(s, str):
            if pair.kind == SPR:
                a = take(True)
                x, y = (a, dual(a)) if s == "+" else (dual(a), a)
            else:
                a = take(s == "+")
                x, y = a, dual(a)
            vecs[i] = _unit(N, x)
            vecs[im] = _unit(N, y)
            done |= {i, im}
            continue
        j = partner[i]
        if j == im:
            if pair.kind != SPR:
                raise ModelError("self-mirrored pair in sppq clan")
            a = take(True)
            u, w = _unit(N, a), _unit(N, dual(a))
            vecs[i] = _add(u, w)
            vecs[j] = _add(u, w, -1)
            done |= {i, j}
            continue
        jm = N - 1 - j
        if pair.kind == SPR:
            a, b = take(True), take(True)
            ui, wi, ud, wd = a, dual(b), dual(a), b
        else:
            a, b = take(True), take(False)
            ui, wi, ud, wd = a, b, dual(a), dual(b)
        u, w = _unit(N, ui), _unit(N, wi)
        up, wp = _unit(N, ud), _unit(N, wd)
        A = J[ui][ud]
        Bw = J[wi][wd]
        vecs[i] = _add(u, w)
        vecs[j] = _add(u, w, -1)
        vecs[im] = _add(_scale(up, Bw), _scale(wp, A))
        vecs[jm] = _add(_scale(up, Bw), _scale(wp, -A))
        done |= {i, j, im, jm}
    return FlagRep((tuple(tuple(v) for v in vecs),))


def check_isotropic(model: MatrixModel, flag: FlagRep) -> bool:
    """F_i^perp = F_{N-i}: the basis pairs only with its mirror."""
    if model.form is None:
        return True
    J = model.form
    (basis,) = flag.bases
    N = len(basis)
    for i in range(N):
        for j in range(N):
            w = sum(basis[i][a] * J[a][b] * basis[j][b] for a in range(N) for b in range(N))
            if (w != 0) != (j == N - 1 - i):
                return False
    return True


# ------------------------------------------------------------ invariants


def _rank_cols(vectors) -> int:
    if not vectors:
        return 0
    return kernels.rank([list(v) for v in vectors])


def flag_key(pair: SymmetricPair, flag: FlagRep) -> tuple:
    """Complete K-orbit invariant of a flag (relative position data)."""
    model = matrix_model(pair)
    if pair.kind == CGL:
        F, G = flag.bases
        n = pair.N
        Fl = [v[:n] for v in F]
        Gl = [v[n:] for v in G]
        return tuple(tuple(i + j - _rank_cols(Fl[:i] + Gl[:j]) for j in range(1, n + 1)) for i in range(1, n + 1))
    (basis,) = flag.bases
    N = len(basis)
    plus, minus = model.plus, model.minus
    a = tuple(i - _rank_cols([[v[k] for k in minus] for v in basis[:i]]) for i in range(1, N + 1))
    b = tuple(i - _rank_cols([[v[k] for k in plus] for v in basis[:i]]) for i in range(1, N + 1))
    tv = [[model.tau(k) * v[k] for k in range(N)] for v in basis]
    c = tuple(_rank_cols(list(basis[:i]) + tv[:j]) for i in range(1, N + 1) for j in range(i, N + 1))
    return (a, b, c)


def _dual_basis(basis: Sequence[Sequence[int]]) -> list[list[int]]:
    """Integer matrix A with A @ B = d I for B the matrix with the given columns."""
    return kernels.scaled_inverse([list(v) for v in basis])[0]


def _component_frames(model: MatrixModel, flag: FlagRep):
    """Per component: (local coordinate list, basis columns in local coords, dual rows)."""
    out = []
    for (off, ln), basis in zip(model.components, flag.bases):
        coords = list(range(off, off + ln))
        B = [[v[k] for k in coords] for v in basis]  # B[b] = b-th basis vector (local)
        A = _dual_basis(B)
        out.append((coords, B, A))
    return out


def _conditions(model: MatrixModel, flag: FlagRep, basis_elems: Sequence[Sparse], blocks_per_comp, strict: bool):
    """Rows of the linear system (A x B)_{ab} = 0 over the given basis.

    With ``strict`` the pairs a > b (block-wise) are used, else a >= b.
    """
    rows = []
    for (coords, B, A), blocks in zip(_component_frames(model, flag), blocks_per_comp):
        loc = {g: l for l, g in enumerate(coords)}
        ln = len(coords)
        elems = []
        for x in basis_elems:
            elems.append([(loc[i], loc[j], v) for i, j, v in x if i in loc and j in loc])
        pairs = [
            (a, b)
            for a in range(ln)
            for b in range(ln)
            if blocks[a] > blocks[b] or (not strict and blocks[a] == blocks[b])
        ]
        rows.extend(kernels.bilinear_rows(A, B, elems, pairs))
    return rows


def orbit_dimension(pair: SymmetricPair, flag: FlagRep) -> int:
    """dim K - dim of the stabiliser of the flag in k."""
    model = matrix_model(pair)
    blocks = [list(range(ln)) for _, ln in model.components]
    rows = _conditions(model, flag, model.k_basis, blocks, strict=True)
    return kernels.rank(rows) if rows else 0


# -------------------------------------------------------------- parabolics


def kept_steps(pair: SymmetricPair, P: Parabolic) -> list[list[int]]:
    """Flag steps retained by the parabolic, per component (0 and N included)."""
    out = []
    for S, (_, ln) in zip(P.factor_roots(pair), matrix_model(pair).components):
        if pair.ambient == SP:
            n = ln // 2
            keep = {0, ln}
            for i in range(1, n + 1):
                if i not in S:
                    keep |= {i, ln - i}
        else:
            keep = {0, ln} | {i for i in range(1, ln) if i not in S}
        out.append(sorted(keep))
    return out


def _blocks_for(pair: SymmetricPair, P: Parabolic) -> list[list[int]]:
    blocks = []
    for keep, (_, ln) in zip(kept_steps(pair, P), matrix_model(pair).components):
        bl = []
        for pos in range(1, ln + 1):
            bl.append(sum(1 for k in keep if 0 < k < pos))
        blocks.append(bl)
    return blocks


@dataclass(frozen=True)
class ConormalSpace:
    pair: SymmetricPair
    matrices: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.matrices)


def conormal_space(pair: SymmetricPair, flag: FlagRep, P: Parabolic | None = None) -> ConormalSpace:
    """{x in s : x maps each kept step into the previous one}, as integer matrices."""
    model = matrix_model(pair)
    if P is None:
        P = Parabolic(frozenset())
    blocks = _blocks_for(pair, P)
    rows = _conditions(model, flag, model.s_basis, blocks, strict=False)
    ns = kernels.nullspace(rows, len(model.s_basis)) if rows else [
        [int(i == j) for i in range(len(model.s_basis))] for j in range(len(model.s_basis))
    ]
    mats = []
    n = model.size
    for coef in ns:
        m = [[0] * n for _ in range(n)]
        for c, x in zip(coef, model.s_basis):
            if c:
                for i, j, v in x:
                    m[i][j] += c * v
        mats.append(tuple(tuple(r) for r in m))
    return ConormalSpace(pair, tuple(mats))


def dual_conormal_space(pair: SymmetricPair, flag: FlagRep, P: Parabolic | None = None) -> int:
    """Dimension of {x in s : tr(x y) = 0 for all y in the parabolic}, computed directly."""
    model = matrix_model(pair)
    if P is None:
        P = Parabolic(frozenset())
    n = model.size
    # basis of the stabilising parabolic: elements g of sp/gl preserving kept steps
    gl_basis = [((i, j, 1),) for i in range(n) for j in range(n)]
    if pair.kind == CGL:
        h = n // 2
        g_basis = [x for x in gl_basis if (x[0][0] < h) == (x[0][1] < h)]
        rows = _conditions(model, flag, g_basis, _blocks_for(pair, P), strict=True)
    elif model.form is not None:
        g_basis = _sp_basis(n)
        rows = _conditions(model, flag, g_basis, _blocks_for(pair, P), strict=True)
    else:
        g_basis = gl_basis
        rows = _conditions(model, flag, g_basis, _blocks_for(pair, P), strict=True)
    p_coefs = kernels.nullspace(rows, len(g_basis)) if rows else [
        [int(i == j) for i in range(len(g_basis))] for j in range(len(g_basis))
    ]
    pdense = []
    for coef in p_coefs:
        m = [[0] * n for _ in range(n)]
        for c, x in zip(coef, g_basis):
            if c:
                for i, j, v in x:
                    m[i][j] += c * v
        pdense.append(m)
    sd = [_dense(x, n) for x in model.s_basis]
    trace_rows = [[sum(y[i][j] * s[j][i] for i in range(n) for j in range(n)) for s in sd] for y in pdense]
    return len(sd) - (kernels.rank(trace_rows) if trace_rows else 0)


# ------------------------------------------------------------ signed types


def _jordan_partition(ranks: Sequence[int]) -> Partition:
    rows = []
    for m in range(1, len(ranks)):
        at_least = ranks[m - 1] - ranks[m]
        nxt = (ranks[m] - ranks[m + 1]) if m + 1 < len(ranks) else ranks[m]
        rows.extend([m] * (at_least - nxt))
    return normalize(rows)


def signed_jordan_type(pair: SymmetricPair, x: Sequence[Sequence[int]]) -> SignedTableau:
    """Signed tableau of a nilpotent element x of s."""
    model = matrix_model(pair)
    n = model.size
    if pair.kind == CGL:
        h = n // 2
        X = [list(r[:h]) for r in x[:h]]
        rp, _ = kernels.rank_profile(X, list(range(h)), [], h)
        if rp[-1] != 0:
            raise ModelError("element is not nilpotent")
        return unsigned(_jordan_partition(rp))
    rp, rm = kernels.rank_profile([list(r) for r in x], list(model.plus), list(model.minus), n)
    if rp[-1] or rm[-1]:
        raise ModelError("element is not nilpotent")
    t = from_profile(rp, rm)
    return t


def _rng(seed: int, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def generic_signed_type(
    pair: SymmetricPair,
    V: ConormalSpace,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    tag: str = "",
    samples: list | None = None,
) -> SignedTableau:
    """Signed type of a generic element of V, by seeded sampling.

    Trial k draws integer coefficients in [-h, h], h = 2^k.  The answer is
    the unique maximum of the sampled types in the closure order.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    model = matrix_model(pair)
    n = model.size
    if V.dim == 0:
        zero = [[0] * n for _ in range(n)]
        return signed_jordan_type(pair, zero)
    rng = _rng(seed, f"{pair}:{tag}")
    seen: list[SignedTableau] = []
    for k in range(trials):
        h = 1 << k
        coef = [rng.randint(-h, h) for _ in range(V.dim)]
        x = kernels.combine(coef, V.matrices)
        seen.append(signed_jordan_type(pair, x))
    if samples is not None:
        samples.extend(seen)
    maxima = sorted({t for t in seen if not any(u != t and closure_leq(pair, t, u) for u in seen)}, key=str)
    if len(maxima) != 1:
        raise GenericityError(f"incomparable sampled maxima {[str(t) for t in maxima]} (seed {seed})")
    return maxima[0]


# ------------------------------------------------------------------ Phi


@lru_cache(maxsize=None)
def phi_B(pair: SymmetricPair, c: Clan, seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS) -> SignedTableau:
    flag = representative_flag(pair, c)
    V = conormal_space(pair, flag)
    return generic_signed_type(pair, V, seed, trials, tag=f"B:{clan_id(pair, c)}")


def _clan_by_id(pair: SymmetricPair, ident: str) -> Clan:
    for c in enumerate_clans(pair):
        if clan_id(pair, c) == ident:
            return c
    raise KeyError(ident)


@lru_cache(maxsize=None)
def phi_P(
    pair: SymmetricPair,
    P: Parabolic,
    rep: str,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    cross_check: bool = True,
) -> SignedTableau:
    """Phi of the class whose dense member is ``rep``; equals Phi_B(rep)."""
    c = _clan_by_id(pair, rep)
    value = phi_B(pair, c, seed, trials)
    if cross_check and P.levi:
        flag = representative_flag(pair, c)
        V = conormal_space(pair, flag, P)
        other = generic_signed_type(pair, V, seed, trials, tag=f"P{P}:{rep}")
        if other != value:
            raise ModelError(f"Phi_P cross-check failed for {rep}: {other} != {value}")
    return value


def orbit_dim_from_tableau(pair: SymmetricPair, t: SignedTableau) -> int:
    return half_orbit_dim(pair, t)


def tableau_closure_leq(pair: SymmetricPair, t1: SignedTableau, t2: SignedTableau) -> bool:
    return closure_leq(pair, t1, t2)


def richardson(pair: SymmetricPair, P: Parabolic) -> list[Partition]:
    """Richardson partition per simple factor (two for cgl)."""
    return [richardson_partition(pair.ambient, pair.rank, S) for S in P.factor_roots(pair)]


def nilpotent_orbits_theta(pair: SymmetricPair, P: Parabolic) -> list[SignedTableau]:
    """Valid tableaux inside the closure of the Richardson orbit of P."""
    rich = richardson(pair, P)
    if pair.kind == CGL:
        a, b = rich
        # s = gl_n meets both factors' cones
        return [t for t in all_tableaux(pair) if dominates(a, t.shape) and dominates(b, t.shape)]
    return [t for t in all_tableaux(pair) if dominates(rich[0], t.shape)]


def weighted_dynkin(ambient: str, lam: Sequence[int]) -> list[int]:
    """Weighted Dynkin labels (Bourbaki order) of the orbit with partition lam."""
    h: list[int] = []
    for k in lam:
        h.extend(k - 1 - 2 * i for i in range(k))
    h.sort(reverse=True)
    if ambient == GL:
        return [h[i] - h[i + 1] for i in range(len(h) - 1)]
    n = len(h) // 2
    top = h[:n]
    return [top[i] - top[i + 1] for i in range(n - 1)] + [2 * top[n - 1]]


def is_even(ambient: str, lam: Sequence[int]) -> bool:
    return all(x in (0, 2) for x in weighted_dynkin(ambient, lam))


def parabolic_from_even_orbit(ambient: str, lam: Sequence[int]) -> frozenset[int]:
    labels = weighted_dynkin(ambient, lam)
    if any(x not in (0, 2) for x in labels):
        raise ValueError(f"orbit {tuple(lam)} is not even")
    return frozenset(i + 1 for i, x in enumerate(labels) if x == 0)


def is_P_regular(pair: SymmetricPair, P: Parabolic, rep: str, seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS) -> bool:
    t = phi_P(pair, P, rep, seed, trials)
    return orbit_dim_from_tableau(pair, t) == P.dim(pair)


def geometric_fibers(pair: SymmetricPair, P: Parabolic, seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS) -> dict[SignedTableau, list[str]]:
    """Classes of K\\P grouped by their Phi value."""
    out: dict[SignedTableau, list[str]] = {}
    for k in project_to_P(pair, P):
        out.setdefault(phi_P(pair, P, k.rep, seed, trials), []).append(k.rep)
    return out


# ------------------------------------------------- geometric enumeration

_GENERIC_T = (2, 3, 5, 7)


def _omega(model: MatrixModel, u, w) -> int:
    J = model.form
    n = len(u)
    return sum(u[a] * J[a][n - 1 - a] * w[n - 1 - a] for a in range(n) if u[a] and w[n - 1 - a])


def line_point(pair: SymmetricPair, flag: FlagRep, alpha: int, t: int) -> FlagRep:
    """The flag at parameter t on the P^1 through ``flag`` for the simple root alpha."""
    model = matrix_model(pair)
    bases = [list(map(list, b)) for b in flag.bases]
    if pair.kind == CGL:
        n = pair.N
        comp, j = (0, alpha - 1) if alpha < n else (1, alpha - n)
        b = bases[comp]
        b[j] = _add(b[j], b[j + 1], t)
    elif pair.kind == UPQ:
        b = bases[0]
        b[alpha - 1] = _add(b[alpha - 1], b[alpha], t)
    else:
        b = bases[0]
        N = len(b)
        n = N // 2
        j = alpha - 1
        if alpha == n:
            b[j] = _add(b[j], b[j + 1], t)
        else:
            jm = N - 2 - j
            w_j = _omega(model, b[j], b[N - 1 - j])
            w_j1 = _omega(model, b[j + 1], b[N - 2 - j])
            new_jm = _add(_scale(b[jm], w_j), _scale(b[jm + 1], -t * w_j1))
            b[j] = _add(b[j], b[j + 1], t)
            b[jm] = new_jm
    return FlagRep(tuple(tuple(tuple(v) for v in comp) for comp in bases))


def _closed_flags(pair: SymmetricPair) -> list[FlagRep]:
    from itertools import permutations, product

    model = matrix_model(pair)
    M = model.size
    if pair.kind == CGL:
        n = pair.N
        F = tuple(tuple(_unit(M, i)) for i in range(n))
        G = tuple(tuple(_unit(M, n + i)) for i in range(n))
        return [FlagRep((F, G))]
    N = pair.N
    if pair.kind == UPQ:
        return [FlagRep((tuple(tuple(_unit(N, i)) for i in perm),)) for perm in permutations(range(N))]
    n = N // 2
    out = []
    for perm in permutations(range(n)):
        for signs in product((0, 1), repeat=n):
            vecs = [None] * N
            for pos, (a, s) in enumerate(zip(perm, signs)):
                x, y = (a, N - 1 - a) if s == 0 else (N - 1 - a, a)
                vecs[pos] = tuple(_unit(N, x))
                vecs[N - 1 - pos] = tuple(_unit(N, y))
            out.append(FlagRep((tuple(vecs),)))
    return out


@dataclass
class GeometricOrbits:
    dims: dict[tuple, int]
    flags: dict[tuple, FlagRep]
    edges: set[tuple[tuple, tuple, int]]


def geometric_orbits(pair: SymmetricPair) -> GeometricOrbits:
    """All K-orbits on B reached from the closed ones by generic P^1 moves.

    Orbits are identified by :func:`flag_key`; an edge (Q, Q', alpha) means
    that the generic point of the alpha-line through Q lies in the larger
    orbit Q'.
    """
    dims: dict[tuple, int] = {}
    flags: dict[tuple, FlagRep] = {}
    queue = []
    for f in _closed_flags(pair):
        k = flag_key(pair, f)
        if k not in dims:
            dims[k] = orbit_dimension(pair, f)
            flags[k] = f
            queue.append(k)
    bottom = min(dims.values())
    for k in [k for k in queue if dims[k] != bottom]:
        del dims[k], flags[k]
    queue = [k for k in queue if k in dims]
    edges = set()
    while queue:
        k = queue.pop(0)
        f = flags[k]
        for alpha in range(1, pair.num_simple_roots + 1):
            found = {}
            for t in _GENERIC_T:
                g = line_point(pair, f, alpha, t)
                gk = flag_key(pair, g)
                if gk not in found:
                    found[gk] = (orbit_dimension(pair, g), g)
            top = max(d for d, _ in found.values())
            tops = [gk for gk, (d, _) in found.items() if d == top]
            if len(tops) != 1:
                raise ModelError(f"no unique generic orbit on the line for root {alpha}")
            gk = tops[0]
            if top > dims[k]:
                edges.add((k, gk, alpha))
                if gk not in dims:
                    dims[gk] = top
                    flags[gk] = found[gk][1]
                    queue.append(gk)
    return GeometricOrbits(dims, flags, edges)
