"""Signed tableaux labelling nilpotent K-orbits on s.

A row of length l with leading sign e stands for a Jordan chain
v, xv, ..., x^{l-1}v whose generator v lies in the e-summand; the signs
alternate along the row.  For ``cgl`` pairs the rows are unsigned.

String form: tokens ``i^j+`` / ``i^j-`` (``i^j`` unsigned) separated by
spaces, longest rows first and ``+`` before ``-``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .pairs import CGL, SPPQ, SPR, UPQ, SymmetricPair
from .partitions import dominates, partitions, transpose

Row = tuple[int, int]  # (length, sign) with sign in {1, -1, 0}


class TableauError(ValueError):
    pass


def _sort_key(row: Row):
    return (-row[0], -row[1])


@dataclass(frozen=True, order=True)
class SignedTableau:
    rows: tuple[Row, ...]

    @classmethod
    def of(cls, rows: Iterable[Row]) -> "SignedTableau":
        rs = [(int(l), int(s)) for l, s in rows if l > 0]
        return cls(tuple(sorted(rs, key=_sort_key)))

    @classmethod
    def parse(cls, text: str) -> "SignedTableau":
        rows: list[Row] = []
        if text.strip() == "0":
            return cls(())
        for tok in text.split():
            m = re.fullmatch(r"(\d+)\^(\d+)([+-]?)", tok)
            if not m:
                raise TableauError(f"bad tableau token {tok!r}")
            sign = {"+": 1, "-": -1, "": 0}[m.group(3)]
            rows.extend([(int(m.group(1)), sign)] * int(m.group(2)))
        return cls.of(rows)

    def __str__(self) -> str:
        if not self.rows:
            return "0"
        toks = []
        i = 0
        while i < len(self.rows):
            j = i
            while j < len(self.rows) and self.rows[j] == self.rows[i]:
                j += 1
            l, s = self.rows[i]
            toks.append(f"{l}^{j - i}{'+' if s > 0 else '-' if s < 0 else ''}")
            i = j
        return " ".join(toks)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(sorted((l for l, _ in self.rows), reverse=True))

    @property
    def size(self) -> int:
        return sum(l for l, _ in self.rows)

    def signature(self) -> tuple[int, int]:
        plus = minus = 0
        for l, s in self.rows:
            a = (l + 1) // 2
            b = l // 2
            if s >= 0:
                plus += a
                minus += b
            else:
                plus += b
                minus += a
        return plus, minus

    def profile(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Formal ranks r(m, +), r(m, -) of x^m on each summand, m = 0..size."""
        top = self.size
        rp = [0] * (top + 1)
        rm = [0] * (top + 1)
        for l, s in self.rows:
            for m in range(min(l, top + 1)):
                # positions 1..l-m, sign at position i is s*(-1)^(i-1)
                k = l - m
                same = (k + 1) // 2
                other = k // 2
                if s >= 0:
                    rp[m] += same
                    rm[m] += other
                else:
                    rp[m] += other
                    rm[m] += same
        return tuple(rp), tuple(rm)


def from_profile(rp: Sequence[int], rm: Sequence[int]) -> SignedTableau:
    """Inverse of :meth:`SignedTableau.profile`.

    With r(m, d) = rank of x^m on the d-summand, rows of length >= m + 1
    whose last box has sign e number r(m, e') - r(m+1, e') where
    e' = e * (-1)^m is the sign of the box m steps back.
    """
    size = max(len(rp), len(rm))
    rp = list(rp) + [0] * (size + 2 - len(rp))
    rm = list(rm) + [0] * (size + 2 - len(rm))

    def r(m, d):
        return rp[m] if d > 0 else rm[m]

    rows: list[Row] = []
    for e in (1, -1):
        # ends[m] = number of rows of length >= m+1 ending with sign e
        ends = []
        for m in range(size + 1):
            d = e if m % 2 == 0 else -e
            v = r(m, d) - r(m + 1, d)
            if v < 0:
                raise TableauError("rank profile is not realisable")
            ends.append(v)
        for m in range(size + 1):
            nxt = ends[m + 1] if m + 1 <= size else 0
            cnt = ends[m] - nxt
            if cnt < 0:
                raise TableauError("rank profile is not realisable")
            length = m + 1
            lead = e if length % 2 == 1 else -e
            rows.extend([(length, lead)] * cnt)
    return SignedTableau.of(rows)


def unsigned(lam: Sequence[int]) -> SignedTableau:
    return SignedTableau.of((l, 0) for l in lam)


def is_valid(pair: SymmetricPair, t: SignedTableau) -> bool:
    if pair.kind == CGL:
        return all(s == 0 for _, s in t.rows) and t.size == pair.N
    if any(s == 0 for _, s in t.rows):
        return False
    plus, minus = t.signature()
    counts: dict[Row, int] = {}
    for row in t.rows:
        counts[row] = counts.get(row, 0) + 1
    lengths = {l for l, _ in t.rows}
    if pair.kind == UPQ:
        return (plus, minus) == (pair.p, pair.q)
    if pair.kind == SPR:
        if (plus, minus) != (pair.p, pair.p):
            return False
        return all(counts.get((l, 1), 0) == counts.get((l, -1), 0) for l in lengths if l % 2)
    if pair.kind == SPPQ:
        if (plus, minus) != (2 * pair.p, 2 * pair.q):
            return False
        for l in lengths:
            a, b = counts.get((l, 1), 0), counts.get((l, -1), 0)
            if l % 2 == 0 and a != b:
                return False
            if l % 2 == 1 and (a % 2 or b % 2):
                return False
        return True
    raise TableauError(f"unknown pair {pair}")


@lru_cache(maxsize=None)
def _signed_fillings(lam: tuple[int, ...]) -> tuple[SignedTableau, ...]:
    out = set()
    distinct = sorted(set(lam), reverse=True)
    mult = [lam.count(l) for l in distinct]

    def rec(i, acc):
        if i == len(distinct):
            out.add(SignedTableau.of(acc))
            return
        l, m = distinct[i], mult[i]
        for a in range(m + 1):
            rec(i + 1, acc + [(l, 1)] * a + [(l, -1)] * (m - a))

    rec(0, [])
    return tuple(sorted(out, key=str))


def all_tableaux(pair: SymmetricPair) -> list[SignedTableau]:
    """Every valid tableau for the pair, in a fixed order."""
    if pair.kind == CGL:
        return [unsigned(lam) for lam in partitions(pair.N)]
    out = []
    for lam in partitions(pair.N):
        for t in _signed_fillings(lam):
            if is_valid(pair, t):
                out.append(t)
    return out


def zero_tableau(pair: SymmetricPair) -> SignedTableau:
    if pair.kind == CGL:
        return unsigned((1,) * pair.N)
    if pair.kind == UPQ:
        return SignedTableau.of([(1, 1)] * pair.p + [(1, -1)] * pair.q)
    if pair.kind == SPR:
        return SignedTableau.of([(1, 1)] * pair.p + [(1, -1)] * pair.p)
    return SignedTableau.of([(1, 1)] * (2 * pair.p) + [(1, -1)] * (2 * pair.q))


def closure_leq(pair: SymmetricPair, t1: SignedTableau, t2: SignedTableau) -> bool:
    """Closure order: every rank r(m, d) of t1 is at most that of t2."""
    if pair.kind == CGL:
        return dominates(t2.shape, t1.shape)
    p1, m1 = t1.profile()
    p2, m2 = t2.profile()
    n = max(len(p1), len(p2))
    pad = lambda v: list(v) + [0] * (n - len(v))  # noqa: E731
    return all(a <= b for a, b in zip(pad(p1), pad(p2))) and all(a <= b for a, b in zip(pad(m1), pad(m2)))


def half_orbit_dim(pair: SymmetricPair, t: SignedTableau) -> int:
    """dim of the K-orbit: half the dimension of the complex G-orbit."""
    lt = transpose(t.shape)
    s = sum(c * c for c in lt)
    if pair.kind == CGL:
        n = pair.N
        return n * n - s
    if pair.ambient == "GL":
        n = pair.N
        full = n * n - s
    else:
        n = pair.rank
        odd = sum(1 for l in t.shape if l % 2)
        twice = 2 * (2 * n * n + n) - s - odd
        if twice % 2:
            raise TableauError("odd complex orbit dimension")
        full = twice // 2
    if full % 2:
        raise TableauError(f"orbit dimension {full} is odd")
    return full // 2
