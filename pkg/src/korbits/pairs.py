"""Symmetric pairs and parabolic types.

Descriptors::

    cgl:n      GL(n,C)   K = GL_n diagonal in GL_n x GL_n
    upq:p,q    U(p,q)    K = GL_p x GL_q in GL_{p+q}
    spr:n      Sp(2n,R)  K = GL_n in Sp_{2n}
    sppq:p,q   Sp(p,q)   K = Sp_{2p} x Sp_{2q} in Sp_{2p+2q}

Simple roots are numbered 1..r in Bourbaki order.  For the type C pairs
roots 1..n-1 are short (e_i - e_{i+1}) and root n is the long root 2e_n.
For ``cgl:n`` roots 1..n-1 belong to the first GL_n factor and roots
n..2n-2 to the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .weyl_char import TYPE_A, TYPE_BC, BCFactor, LeviType, WeylType, levi_of_parabolic

CGL = "cgl"
UPQ = "upq"
SPR = "spr"
SPPQ = "sppq"

GL = "GL"
SP = "Sp"


class PairError(ValueError):
    pass


@dataclass(frozen=True)
class SymmetricPair:
    kind: str
    p: int
    q: int = 0

    def __post_init__(self):
        if self.kind not in (CGL, UPQ, SPR, SPPQ):
            raise PairError(f"unknown pair kind {self.kind!r}")
        if self.kind in (CGL, SPR):
            if self.p < 1 or self.q != 0:
                raise PairError(f"{self.kind} takes one positive rank")
        elif self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise PairError(f"{self.kind} needs p, q >= 0 with p + q >= 1")

    @classmethod
    def parse(cls, text: str) -> "SymmetricPair":
        try:
            kind, _, args = text.strip().lower().partition(":")
            nums = [int(a) for a in args.split(",")] if args else []
        except ValueError as exc:
            raise PairError(f"cannot parse pair {text!r}") from exc
        if kind in (CGL, SPR) and len(nums) == 1:
            return cls(kind, nums[0])
        if kind in (UPQ, SPPQ) and len(nums) == 2:
            return cls(kind, nums[0], nums[1])
        raise PairError(f"cannot parse pair {text!r}")

    def __str__(self) -> str:
        if self.kind in (CGL, SPR):
            return f"{self.kind}:{self.p}"
        return f"{self.kind}:{self.p},{self.q}"

    @property
    def N(self) -> int:
        """Size of the defining representation (of one factor for cgl)."""
        if self.kind == CGL:
            return self.p
        if self.kind == UPQ:
            return self.p + self.q
        if self.kind == SPR:
            return 2 * self.p
        return 2 * (self.p + self.q)

    @property
    def ambient(self) -> str:
        return SP if self.kind in (SPR, SPPQ) else GL

    @property
    def rank(self) -> int:
        """Rank n of the Weyl group of one simple factor."""
        return self.N // 2 if self.ambient == SP else self.N

    @property
    def weyl(self) -> WeylType:
        return WeylType(TYPE_BC if self.ambient == SP else TYPE_A, self.rank)

    @property
    def num_simple_roots(self) -> int:
        if self.kind == CGL:
            return 2 * (self.p - 1)
        return self.weyl.simple_roots

    @property
    def dim_k(self) -> int:
        p, q = self.p, self.q
        return {
            CGL: p * p,
            UPQ: p * p + q * q,
            SPR: p * p,
            SPPQ: p * (2 * p + 1) + q * (2 * q + 1),
        }[self.kind]

    @property
    def dim_flag(self) -> int:
        """Dimension of the full flag variety (number of positive roots)."""
        n = self.rank
        if self.kind == CGL:
            return n * (n - 1)
        return n * (n - 1) // 2 if self.ambient == GL else n * n


@dataclass(frozen=True)
class Parabolic:
    """Parabolic type given by the simple roots in its Levi factor."""

    levi: frozenset[int]

    @classmethod
    def of(cls, pair: SymmetricPair, roots: Iterable[int] = ()) -> "Parabolic":
        S = frozenset(int(r) for r in roots)
        bad = sorted(r for r in S if not 1 <= r <= pair.num_simple_roots)
        if bad:
            raise PairError(f"simple roots {bad} out of range for {pair}")
        return cls(S)

    def __str__(self) -> str:
        return ",".join(map(str, sorted(self.levi))) if self.levi else "B"

    def factor_roots(self, pair: SymmetricPair) -> list[frozenset[int]]:
        """Levi roots per simple factor of G (two factors for cgl)."""
        if pair.kind != CGL:
            return [self.levi]
        n = pair.p
        return [
            frozenset(r for r in self.levi if r < n),
            frozenset(r - (n - 1) for r in self.levi if r >= n),
        ]

    def levi_types(self, pair: SymmetricPair) -> list[LeviType]:
        W = pair.weyl
        return [levi_of_parabolic(W, S) for S in self.factor_roots(pair)]

    def dim(self, pair: SymmetricPair) -> int:
        """Dimension of the partial flag variety, dim g/p."""
        total = 0
        for S in self.factor_roots(pair):
            total += _all_positive_roots(pair.ambient, pair.rank)
            total -= _positive_roots(pair.ambient, pair.rank, S)
        return total


def _all_positive_roots(ambient: str, n: int) -> int:
    return n * (n - 1) // 2 if ambient == GL else n * n


def _positive_roots(ambient: str, n: int, levi: frozenset[int]) -> int:
    """Number of positive roots of the Levi with the given simple roots."""
    W = WeylType(TYPE_BC if ambient == SP else TYPE_A, n)
    L = levi_of_parabolic(W, levi)
    total = 0
    for f in L.factors:
        a = f.size
        if isinstance(f, BCFactor):
            total += a * a
        else:
            total += a * (a - 1) // 2
    return total


def levi_blocks(ambient: str, n: int, levi: Iterable[int]) -> tuple[list[int], int]:
    """GL block sizes and the rank of the symplectic block of a Levi."""
    W = WeylType(TYPE_BC if ambient == SP else TYPE_A, n)
    L = levi_of_parabolic(W, levi)
    blocks = []
    m = 0
    for f in L.factors:
        if isinstance(f, BCFactor):
            m = f.size
        else:
            blocks.append(f.size)
    return blocks, m


def all_parabolics(pair: SymmetricPair) -> list[Parabolic]:
    r = pair.num_simple_roots
    out = []
    for mask in range(1 << r):
        out.append(Parabolic(frozenset(i + 1 for i in range(r) if mask >> i & 1)))
    return out
