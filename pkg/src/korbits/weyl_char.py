"""Characters of the Weyl groups of types A and B/C.

Conventions
-----------
Type A of rank n is the symmetric group S_n.  Irreducibles are partitions
of n, with ``(n,)`` the trivial and ``(1,)*n`` the sign representation.

Type BC of rank n is the hyperoctahedral group of signed permutations of
n letters.  Irreducibles are bipartitions ``(alpha, beta)``; the second
component carries the sign character of the sign-change subgroup.  So
``((n,), ())`` is trivial, ``((), (1,)*n)`` is the sign representation and
``((n-1,), (1,))`` is the reflection representation on coordinates.
Conjugacy classes are pairs ``(positive cycle type, negative cycle type)``.

Simple reflections of BC_n follow Bourbaki type C order: ``s_1..s_{n-1}``
swap adjacent coordinates and ``s_n`` changes the sign of the last one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Sequence, Union

from .partitions import Partition, centralizer_order, multiplicities, normalize, partitions

TYPE_A = "A"
TYPE_BC = "BC"

Bipartition = tuple[Partition, Partition]
Irrep = Union[Partition, Bipartition]
ConjClass = Union[Partition, Bipartition]


class WeylError(ValueError):
    pass


@dataclass(frozen=True)
class WeylType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in (TYPE_A, TYPE_BC):
            raise WeylError(f"unknown family {self.family!r}")
        if self.rank < 0:
            raise WeylError("rank must be nonnegative")

    @property
    def order(self) -> int:
        n = self.rank
        return factorial(n) if self.family == TYPE_A else 2**n * factorial(n)

    @property
    def simple_roots(self) -> int:
        """Number of simple reflections."""
        return self.rank - 1 if self.family == TYPE_A else self.rank


@dataclass(frozen=True)
class SymFactor:
    size: int


@dataclass(frozen=True)
class BCFactor:
    size: int


Factor = Union[SymFactor, BCFactor]


@dataclass(frozen=True)
class LeviType:
    factors: tuple[Factor, ...]

    def size(self) -> int:
        return sum(f.size for f in self.factors)

    @property
    def order(self) -> int:
        out = 1
        for f in self.factors:
            out *= factorial(f.size) if isinstance(f, SymFactor) else 2**f.size * factorial(f.size)
        return out


def bipartitions(n: int) -> list[Bipartition]:
    out = []
    for a in range(n, -1, -1):
        for alpha in partitions(a):
            for beta in partitions(n - a):
                out.append((alpha, beta))
    return out


def irreps(W: WeylType) -> list[Irrep]:
    if W.family == TYPE_A:
        return list(partitions(W.rank))
    return bipartitions(W.rank)


def classes(W: WeylType) -> list[ConjClass]:
    # same index sets as irreducibles
    return irreps(W)


def _check_size(W: WeylType, x, what: str) -> None:
    if W.family == TYPE_A:
        ok = isinstance(x, tuple) and all(isinstance(p, int) for p in x) and sum(x) == W.rank
    else:
        ok = (
            isinstance(x, tuple)
            and len(x) == 2
            and all(isinstance(p, tuple) for p in x)
            and sum(x[0]) + sum(x[1]) == W.rank
        )
    if not ok:
        raise WeylError(f"{what} {x!r} does not match {W}")


def class_size(W: WeylType, c: ConjClass) -> int:
    _check_size(W, c, "class")
    if W.family == TYPE_A:
        return W.order // centralizer_order(c)
    pos, neg = c
    z = 1
    for lam in (pos, neg):
        for k, m in multiplicities(lam).items():
            z *= (2 * k) ** m * factorial(m)
    return W.order // z


def sign_value(W: WeylType, c: ConjClass) -> int:
    if W.family == TYPE_A:
        return -1 if (sum(c) - len(c)) % 2 else 1
    pos, neg = c
    e = sum(k - 1 for k in pos) + sum(neg)
    return -1 if e % 2 else 1


def _rim_hooks(lam: Partition, k: int) -> list[tuple[Partition, int]]:
    """Partitions obtained by removing a k-rim hook, with the sign (-1)^height."""
    l = len(lam)
    beta = [lam[i] + l - 1 - i for i in range(l)]
    bset = set(beta)
    out = []
    for b in beta:
        t = b - k
        if t < 0 or t in bset:
            continue
        height = sum(1 for x in beta if t < x < b)
        nb = sorted((t if x == b else x for x in beta), reverse=True)
        new = normalize(nb[i] - (l - 1 - i) for i in range(l))
        out.append((new, -1 if height % 2 else 1))
    return out


@lru_cache(maxsize=None)
def _chi_a(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    return sum(s * _chi_a(nl, rest) for nl, s in _rim_hooks(lam, k))


@lru_cache(maxsize=None)
def _chi_bc(alpha: Partition, beta: Partition, pos: Partition, neg: Partition) -> int:
    if not pos and not neg:
        return 1 if not alpha and not beta else 0
    if pos:
        k, eps, pos, neg = pos[0], 1, pos[1:], neg
    else:
        k, eps, pos, neg = neg[0], -1, pos, neg[1:]
    total = 0
    for na, s in _rim_hooks(alpha, k):
        total += s * _chi_bc(na, beta, pos, neg)
    for nb, s in _rim_hooks(beta, k):
        total += eps * s * _chi_bc(alpha, nb, pos, neg)
    return total


def character_value(W: WeylType, sigma: Irrep, c: ConjClass) -> int:
    """Value of the irreducible character ``sigma`` on the class ``c``."""
    _check_size(W, sigma, "irrep")
    _check_size(W, c, "class")
    if W.family == TYPE_A:
        return _chi_a(tuple(sigma), tuple(c))
    return _chi_bc(sigma[0], sigma[1], c[0], c[1])


def dimension(W: WeylType, sigma: Irrep) -> int:
    ident = (1,) * W.rank if W.family == TYPE_A else ((1,) * W.rank, ())
    return character_value(W, sigma, ident)


def trivial(W: WeylType) -> Irrep:
    return (W.rank,) if W.family == TYPE_A else (normalize([W.rank]), ())


def sign(W: WeylType) -> Irrep:
    return (1,) * W.rank if W.family == TYPE_A else ((), (1,) * W.rank)


# ---------------------------------------------------------------- Levi data


def levi_of_parabolic(W: WeylType, levi_roots: Iterable[int]) -> LeviType:
    """Levi Weyl group generated by the given simple reflections (1-based)."""
    S = set(levi_roots)
    n = W.rank
    bad = [i for i in S if not 1 <= i <= W.simple_roots]
    if bad:
        raise WeylError(f"simple roots {sorted(bad)} out of range for {W}")
    blocks = []
    size = 1
    for i in range(1, n):
        if i in S:
            size += 1
        else:
            blocks.append(size)
            size = 1
    if n:
        blocks.append(size)
    factors: list[Factor] = [SymFactor(b) for b in blocks]
    if W.family == TYPE_BC and n in S:
        factors[-1] = BCFactor(blocks[-1])
    return LeviType(tuple(factors))


def _check_levi(W: WeylType, L: LeviType) -> None:
    if L.size() != W.rank:
        raise WeylError(f"Levi {L} has size {L.size()}, expected {W.rank}")
    nbc = sum(isinstance(f, BCFactor) for f in L.factors)
    if nbc > 1 or (nbc and W.family == TYPE_A):
        raise WeylError(f"Levi {L} not valid in {W}")


def _factor_classes(f: Factor):
    if isinstance(f, SymFactor):
        W = WeylType(TYPE_A, f.size)
    else:
        W = WeylType(TYPE_BC, f.size)
    return [(c, class_size(W, c), sign_value(W, c)) for c in classes(W)]


def class_fusion(W: WeylType, L: LeviType, cL: Sequence[ConjClass]) -> ConjClass:
    """W-class of an element of L with the given per-factor classes."""
    _check_levi(W, L)
    if len(cL) != len(L.factors):
        raise WeylError("one class per Levi factor required")
    pos: list[int] = []
    neg: list[int] = []
    for f, c in zip(L.factors, cL):
        if isinstance(f, SymFactor):
            _check_size(WeylType(TYPE_A, f.size), c, "class")
            pos.extend(c)
        else:
            _check_size(WeylType(TYPE_BC, f.size), c, "class")
            pos.extend(c[0])
            neg.extend(c[1])
    if W.family == TYPE_A:
        return normalize(pos)
    return (normalize(pos), normalize(neg))


def sign_multiplicity(W: WeylType, L: LeviType, sigma: Irrep) -> int:
    """Multiplicity of sigma in the induction of the sign character of L."""
    _check_levi(W, L)
    _check_size(W, sigma, "irrep")
    total = 0
    per = [_factor_classes(f) for f in L.factors]
    for combo in product(*per):
        size = 1
        sg = 1
        for _, s, e in combo:
            size *= s
            sg *= e
        fused = class_fusion(W, L, [c for c, _, _ in combo])
        total += size * sg * character_value(W, sigma, fused)
    q = Fraction(total, L.order)
    if q.denominator != 1 or q < 0:
        raise WeylError(f"non-integral multiplicity {q}")
    return int(q)


def induced_sign_decomposition(W: WeylType, L: LeviType) -> dict[Irrep, int]:
    out = {}
    for sigma in irreps(W):
        m = sign_multiplicity(W, L, sigma)
        if m:
            out[sigma] = m
    return out


def format_irrep(sigma: Irrep) -> str:
    def p(lam):
        return "(" + ",".join(map(str, lam)) + ")" if lam else "()"

    if sigma and isinstance(sigma[0], tuple):
        return f"[{p(sigma[0])};{p(sigma[1])}]"
    return p(sigma)
