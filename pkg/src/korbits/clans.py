"""Clans: combinatorial labels of K-orbits on the full flag variety.

A clan is a tuple over ``'+'``, ``'-'`` and positive integers, each integer
occurring exactly twice (a matched pair).  Integers are relabelled in order
of first occurrence, so clans compare and print canonically.  For ``cgl``
pairs the clan is a permutation w in one-line notation and labels the
orbit of (F, wF).

Validity and root actions per pair (positions are 1-based, N = length,
i* = N + 1 - i the mirror position):

=========  =================================================================
upq p,q    #plus - #minus = p - q
spr n      N = 2n; a sign at i has the opposite sign at i*; the partner of
           i* is the mirror of the partner of i (a pair may be its own
           mirror)
sppq p,q   N = 2(p+q); a sign at i has the same sign at i*; pairs mirror
           to pairs and no pair is its own mirror; #plus + #pairs = 2p
=========  =================================================================

Root action of the type A simple root at positions (j, j+1):

==========================  ==========================================
opposite signs              noncompact imaginary; Cayley to a new pair
equal signs                 compact imaginary
j, j+1 matched to each      real
other
anything else               complex; the neighbour swaps j and j+1
==========================  ==========================================

For the type C pairs a short root alpha_i acts at (i, i+1) and at the
mirror (N-i, N-i+1) at the same time.  Let c'' swap both position pairs.
If c'' = c (the patterns ``1212`` / ``1221``) the single swap c' is
used: it is the ascent when it is valid and of higher dimension, a real
descent when lower, and compact imaginary when invalid.  The long root
acts on the middle positions (n, n+1): opposite signs are noncompact
imaginary (Cayley to a self-mirrored pair), equal signs compact, a self
mirrored middle pair real, and two different pairs complex.

Dimensions: with l(c) = sum over pairs (i<j) of j - i minus the pairs
(s<t) nested as s < i < t < j,

    upq   p(p-1)/2 + q(q-1)/2 + l(c)
    spr   n(n-1)/2 + (l(c) + k)/2
    sppq  p^2 + q^2 + (l(c) + k)/2
    cgl   n(n-1)/2 + inv(w)

where k counts mirror classes of pairs that straddle the middle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence, Union

from .pairs import CGL, SPPQ, SPR, UPQ, Parabolic, SymmetricPair
from .poset import DASHED, SOLID, ClosurePoset, Edge

Symbol = Union[str, int]
Clan = tuple[Symbol, ...]

COMPLEX_ASCENT = "complexAscent"
COMPLEX_DESCENT = "complexDescent"
NONCOMPACT = "nonCompactImaginary"
COMPACT = "compactImaginary"
REAL = "real"

_DIGITS = "123456789abcdefghijklmnopqrstuvwxyz"


class ClanError(ValueError):
    pass


@dataclass(frozen=True)
class RootAction:
    root_type: str
    neighbors: frozenset[Clan]


# ------------------------------------------------------------- basics


def canonical(c: Sequence[Symbol]) -> Clan:
    relabel: dict[int, int] = {}
    out: list[Symbol] = []
    for s in c:
        if isinstance(s, int):
            if s not in relabel:
                relabel[s] = len(relabel) + 1
            out.append(relabel[s])
        else:
            out.append(s)
    return tuple(out)


def clan_id(pair: SymmetricPair, c: Clan) -> str:
    if pair.kind == CGL:
        if len(c) <= 9:
            return "".join(str(x) for x in c)
        return ".".join(str(x) for x in c)
    return "".join(s if isinstance(s, str) else _DIGITS[s - 1] for s in c)


def parse_clan(pair: SymmetricPair, text: str) -> Clan:
    text = text.strip()
    try:
        if pair.kind == CGL:
            parts = text.split(".") if "." in text else list(text)
            c: Clan = tuple(int(x) for x in parts)
        else:
            c = canonical([ch if ch in "+-" else _DIGITS.index(ch) + 1 for ch in text])
    except ValueError:
        raise ClanError(f"cannot parse clan {text!r}") from None
    if not is_valid_clan(pair, c):
        raise ClanError(f"{text!r} is not a clan for {pair}")
    return c


def partners(c: Clan) -> dict[int, int]:
    first: dict[int, int] = {}
    out: dict[int, int] = {}
    for i, s in enumerate(c):
        if isinstance(s, int):
            if s in first:
                out[first[s]] = i
                out[i] = first[s]
            else:
                first[s] = i
    return out


def pair_list(c: Clan) -> list[tuple[int, int]]:
    m = partners(c)
    return sorted((i, j) for i, j in m.items() if i < j)


def _flip(s: Symbol) -> Symbol:
    return "-" if s == "+" else "+"


def is_valid_clan(pair: SymmetricPair, c: Clan) -> bool:
    N = pair.N
    if len(c) != N:
        return False
    if pair.kind == CGL:
        return sorted(c) == list(range(1, N + 1))
    counts: dict[int, int] = {}
    for s in c:
        if isinstance(s, int):
            counts[s] = counts.get(s, 0) + 1
        elif s not in ("+", "-"):
            return False
    if any(v != 2 for v in counts.values()):
        return False
    plus = sum(1 for s in c if s == "+")
    minus = sum(1 for s in c if s == "-")
    npairs = len(counts)
    if pair.kind == UPQ:
        return plus - minus == pair.p - pair.q
    m = partners(c)
    for i, s in enumerate(c):
        j = N - 1 - i
        if isinstance(s, str):
            want = _flip(s) if pair.kind == SPR else s
            if c[j] != want:
                return False
        else:
            if not isinstance(c[j], int):
                return False
            if m[j] != N - 1 - m[i]:
                return False
            if pair.kind == SPPQ and m[i] == j:
                return False
    if pair.kind == SPPQ:
        return plus + npairs == 2 * pair.p
    return True


def _gl_clans(N: int, diff: int) -> list[Clan]:
    out: list[Clan] = []

    def rec(prefix: list[Symbol], open_labels: list[int], nxt: int, balance: int):
        pos = len(prefix)
        left = N - pos
        if left == 0:
            if not open_labels and balance == diff:
                out.append(tuple(prefix))
            return
        if len(open_labels) > left:
            return
        for s in ("+", "-"):
            rec(prefix + [s], open_labels, nxt, balance + (1 if s == "+" else -1))
        rec(prefix + [nxt], open_labels + [nxt], nxt + 1, balance)
        for lab in open_labels:
            rec(prefix + [lab], [x for x in open_labels if x != lab], nxt, balance)

    rec([], [], 1, 0)
    return [canonical(c) for c in out]


@lru_cache(maxsize=None)
def _enumerate(pair: SymmetricPair) -> tuple[Clan, ...]:
    if pair.kind == CGL:
        cl = [tuple(w) for w in permutations(range(1, pair.N + 1))]
    elif pair.kind == UPQ:
        cl = _gl_clans(pair.N, pair.p - pair.q)
    else:
        cl = [c for c in _gl_clans(pair.N, 0 if pair.kind == SPR else 2 * (pair.p - pair.q)) if is_valid_clan(pair, c)]
    cl = sorted(set(cl), key=lambda c: (clan_dimension(pair, c), clan_id(pair, c)))
    return tuple(cl)


def enumerate_clans(pair: SymmetricPair) -> list[Clan]:
    """All clans for the pair, sorted by (dimension, id)."""
    return list(_enumerate(pair))


def type_a_length(c: Clan) -> int:
    prs = pair_list(c)
    total = 0
    for i, j in prs:
        nested = sum(1 for s, t in prs if s < i < t < j)
        total += j - i - nested
    return total


def inversions(w: Sequence[int]) -> int:
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def _straddling(c: Clan) -> int:
    N = len(c)
    half = N // 2
    seen = set()
    k = 0
    for i, j in pair_list(c):
        if i < half <= j:
            key = min((i, j), (N - 1 - j, N - 1 - i))
            if key not in seen:
                seen.add(key)
                k += 1
    return k


def closed_dimension(pair: SymmetricPair) -> int:
    p, q = pair.p, pair.q
    if pair.kind == CGL or pair.kind == SPR:
        return p * (p - 1) // 2
    if pair.kind == UPQ:
        return p * (p - 1) // 2 + q * (q - 1) // 2
    return p * p + q * q


def clan_dimension(pair: SymmetricPair, c: Clan) -> int:
    if pair.kind == CGL:
        return closed_dimension(pair) + inversions(c)
    la = type_a_length(c)
    if pair.kind == UPQ:
        return closed_dimension(pair) + la
    twice = la + _straddling(c)
    if twice % 2:
        raise ClanError(f"odd length {twice} for {c}")
    return closed_dimension(pair) + twice // 2


def open_dimension(pair: SymmetricPair) -> int:
    """Dimension of the open orbit, i.e. of the flag variety."""
    return pair.dim_flag


# --------------------------------------------------------- root actions


def _swap(c: Clan, j: int) -> Clan:
    lst = list(c)
    lst[j], lst[j + 1] = lst[j + 1], lst[j]
    return canonical(lst)


def _cayley(c: Clan, positions: Sequence[int]) -> Clan:
    lst = list(c)
    base = max([s for s in c if isinstance(s, int)], default=0)
    for k, j in enumerate(positions):
        lst[j] = lst[j + 1] = base + 1 + k
    return canonical(lst)


def _type_a_action(pair: SymmetricPair, c: Clan, j: int) -> RootAction:
    a, b = c[j], c[j + 1]
    if isinstance(a, str) and isinstance(b, str):
        if a == b:
            return RootAction(COMPACT, frozenset())
        return RootAction(NONCOMPACT, frozenset([_cayley(c, [j])]))
    if isinstance(a, int) and a == b:
        return RootAction(REAL, frozenset())
    d = _swap(c, j)
    if clan_dimension(pair, d) > clan_dimension(pair, c):
        return RootAction(COMPLEX_ASCENT, frozenset([d]))
    return RootAction(COMPLEX_DESCENT, frozenset())


def _short_action(pair: SymmetricPair, c: Clan, j: int) -> RootAction:
    N = len(c)
    jm = N - 2 - j
    a, b = c[j], c[j + 1]
    if isinstance(a, str) and isinstance(b, str):
        if a == b:
            return RootAction(COMPACT, frozenset())
        return RootAction(NONCOMPACT, frozenset([_cayley(c, [j, jm])]))
    if isinstance(a, int) and a == b:
        return RootAction(REAL, frozenset())
    both = list(c)
    both[j], both[j + 1] = both[j + 1], both[j]
    both[jm], both[jm + 1] = both[jm + 1], both[jm]
    both_c = canonical(both)
    d0 = clan_dimension(pair, c)
    if both_c != c:
        if clan_dimension(pair, both_c) > d0:
            return RootAction(COMPLEX_ASCENT, frozenset([both_c]))
        return RootAction(COMPLEX_DESCENT, frozenset())
    single = _swap(c, j)
    if not is_valid_clan(pair, single):
        return RootAction(COMPACT, frozenset())
    if clan_dimension(pair, single) > d0:
        return RootAction(NONCOMPACT, frozenset([single]))
    return RootAction(REAL, frozenset())


def _long_action(pair: SymmetricPair, c: Clan) -> RootAction:
    n = len(c) // 2
    j = n - 1
    a, b = c[j], c[j + 1]
    if isinstance(a, str):
        if a == b:
            return RootAction(COMPACT, frozenset())
        return RootAction(NONCOMPACT, frozenset([_cayley(c, [j])]))
    if a == b:
        return RootAction(REAL, frozenset())
    d = _swap(c, j)
    if clan_dimension(pair, d) > clan_dimension(pair, c):
        return RootAction(COMPLEX_ASCENT, frozenset([d]))
    return RootAction(COMPLEX_DESCENT, frozenset())


def _cgl_action(pair: SymmetricPair, w: Clan, alpha: int) -> RootAction:
    n = pair.N
    lst = list(w)
    if alpha < n:
        # left multiplication by s_alpha: swap values alpha, alpha+1
        d = tuple(alpha + 1 if x == alpha else alpha if x == alpha + 1 else x for x in lst)
    else:
        k = alpha - n
        lst[k], lst[k + 1] = lst[k + 1], lst[k]
        d = tuple(lst)
    if inversions(d) > inversions(w):
        return RootAction(COMPLEX_ASCENT, frozenset([d]))
    return RootAction(COMPLEX_DESCENT, frozenset())


def root_action(pair: SymmetricPair, c: Clan, alpha: int) -> RootAction:
    """Type of the simple root alpha (1-based) for c and the dense neighbours."""
    if not 1 <= alpha <= pair.num_simple_roots:
        raise ClanError(f"simple root {alpha} out of range for {pair}")
    if pair.kind == CGL:
        return _cgl_action(pair, c, alpha)
    if pair.kind == UPQ:
        return _type_a_action(pair, c, alpha - 1)
    if alpha == pair.rank:
        return _long_action(pair, c)
    return _short_action(pair, c, alpha - 1)


def ascents(pair: SymmetricPair, c: Clan, alpha: int) -> list[Clan]:
    act = root_action(pair, c, alpha)
    if act.root_type in (COMPLEX_ASCENT, NONCOMPACT):
        return sorted(act.neighbors, key=lambda d: clan_id(pair, d))
    return []


# --------------------------------------------------------------- orders


@lru_cache(maxsize=None)
def _weak(pair: SymmetricPair) -> ClosurePoset:
    clans = enumerate_clans(pair)
    dims = {clan_id(pair, c): clan_dimension(pair, c) for c in clans}
    edges = set()
    for c in clans:
        for a in range(1, pair.num_simple_roots + 1):
            for d in ascents(pair, c, a):
                edges.add(Edge(clan_id(pair, c), clan_id(pair, d), a, SOLID))
    return ClosurePoset(dims, edges)


def weak_order(pair: SymmetricPair) -> ClosurePoset:
    p = _weak(pair)
    return ClosurePoset(dict(p.dims), set(p.edges))


def saturate(poset: ClosurePoset) -> ClosurePoset:
    """Close a poset under the exchange completion, adding dashed edges.

    For every edge Q4 -> Q2 raising dimension by one, and solid edges
    Q4 -a-> Q3, Q2 -a-> Q1 with the same label, the edge Q3 -> Q1 is
    added (dashed) unless already present.  Sweeps run by ascending
    dimension of Q4 until nothing changes.
    """
    dims = poset.dims
    edges = set(poset.edges)
    solid_by: dict[tuple[str, int], list[str]] = {}
    for e in edges:
        if e.style == SOLID and e.label is not None:
            solid_by.setdefault((e.src, e.label), []).append(e.dst)
    labels = sorted({e.label for e in edges if e.label is not None})
    order = sorted(dims, key=lambda v: (dims[v], v))
    guard = len(dims) ** 2 + 1
    for _ in range(guard):
        pairs_present = {(e.src, e.dst) for e in edges}
        added = set()
        for q4 in order:
            outs = sorted({e.dst for e in edges if e.src == q4 and dims[e.dst] == dims[q4] + 1})
            for q2 in outs:
                for a in labels:
                    for q3 in solid_by.get((q4, a), ()):
                        if q3 == q2:
                            continue
                        for q1 in solid_by.get((q2, a), ()):
                            if q1 == q3 or (q3, q1) in pairs_present:
                                continue
                            added.add(Edge(q3, q1, None, DASHED))
                            pairs_present.add((q3, q1))
        if not added:
            return ClosurePoset(dict(dims), edges)
        edges |= added
    raise ClanError("saturation did not terminate")


@lru_cache(maxsize=None)
def _full(pair: SymmetricPair) -> ClosurePoset:
    return saturate(_weak(pair)).transitive_reduction()


def full_closure_order(pair: SymmetricPair) -> ClosurePoset:
    p = _full(pair)
    return ClosurePoset(dict(p.dims), set(p.edges))


# ----------------------------------------------------------- projection


@dataclass(frozen=True)
class OrbitClass:
    """A K-orbit on a partial flag variety as a class of K-orbits on B."""

    members: tuple[str, ...]
    rep: str  # the dense member Q_C
    dim_b: int  # dimension of Q_C

    def dim(self, pair: SymmetricPair, P: Parabolic) -> int:
        """Dimension of the orbit on the partial flag variety."""
        return self.dim_b - (pair.dim_flag - P.dim(pair))


@lru_cache(maxsize=None)
def _project(pair: SymmetricPair, P: Parabolic) -> tuple[OrbitClass, ...]:
    clans = enumerate_clans(pair)
    ids = [clan_id(pair, c) for c in clans]
    by_id = dict(zip(ids, clans))
    dims = {clan_id(pair, c): clan_dimension(pair, c) for c in clans}
    parent = {v: v for v in ids}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for c in clans:
        for a in sorted(P.levi):
            for d in ascents(pair, c, a):
                ra, rb = find(clan_id(pair, c)), find(clan_id(pair, d))
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict[str, list[str]] = {}
    for v in ids:
        groups.setdefault(find(v), []).append(v)
    out = []
    for members in groups.values():
        top = max(dims[v] for v in members)
        reps = [v for v in members if dims[v] == top]
        if len(reps) != 1:
            raise ClanError(f"class {members} has {len(reps)} maximal members")
        rep = reps[0]
        # the dense member admits no ascent through a Levi root, and is the only one
        for v in members:
            no_ascent = all(not ascents(pair, by_id[v], a) for a in P.levi)
            if no_ascent != (v == rep):
                raise ClanError(f"Q_C characterization fails in class {sorted(members)}")
        out.append(OrbitClass(tuple(sorted(members, key=lambda v: (dims[v], v))), rep, top))
    out.sort(key=lambda k: (k.dim_b, k.rep))
    return tuple(out)


def project_to_P(pair: SymmetricPair, P: Parabolic) -> list[OrbitClass]:
    return list(_project(pair, P))


@lru_cache(maxsize=None)
def _orders_on_P(pair: SymmetricPair, P: Parabolic) -> tuple[ClosurePoset, ClosurePoset]:
    classes = _project(pair, P)
    weak_b = _weak(pair)
    full_b = _full(pair)
    reps = [k.rep for k in classes]
    shift = pair.dim_flag - P.dim(pair)
    dims = {k.rep: k.dim_b - shift for k in classes}
    weak_clo = {r: weak_b.upset(r) for r in reps}
    full_clo = {r: full_b.upset(r) for r in reps}
    direct = {(e.src, e.dst): e.label for e in weak_b.edges}

    def hasse(clo):
        out = []
        for a in reps:
            for b in reps:
                if a == b or b not in clo[a]:
                    continue
                if any(c not in (a, b) and c in clo[a] and b in clo[c] for c in reps):
                    continue
                out.append((a, b))
        return out

    weak_edges = {Edge(a, b, direct.get((a, b)), SOLID) for a, b in hasse(weak_clo)}
    full_edges = set()
    for a, b in hasse(full_clo):
        if b in weak_clo[a]:
            full_edges.add(Edge(a, b, direct.get((a, b)), SOLID))
        else:
            full_edges.add(Edge(a, b, None, DASHED))
    return ClosurePoset(dict(dims), weak_edges), ClosurePoset(dict(dims), full_edges)


def closure_orders_on_P(pair: SymmetricPair, P: Parabolic) -> tuple[ClosurePoset, ClosurePoset]:
    """(weak, full) closure orders on K\\P, vertices named by Q_C."""
    w, f = _orders_on_P(pair, P)
    return ClosurePoset(dict(w.dims), set(w.edges)), ClosurePoset(dict(f.dims), set(f.edges))
