"""Springer correspondence for GL(n) and Sp(2n) and the fiber-count formula.

Type C uses the bipartition convention of :mod:`korbits.weyl_char`.  The
representation attached to (orbit, trivial local system) is computed by
Carter's recipe: pad the increasing parts to an odd count, add 0, 1, 2,
... and split the results into evens 2a_i and odds 2b_i + 1; the
bipartition is (a_i - (i-1); b_i - (i-1)).

The other members of a Springer fiber are found on the symbol with
entries ``alpha_i + 2(i-1)`` (top, m+1 entries) and ``beta_i + 2i - 1``
(bottom, m entries).  Maximal runs of consecutive entries occurring once
form intervals; every interval except the one holding the smallest entry
is tied, in increasing order, to a distinct even part of the orbit's
partition.  A character psi of A_G swaps top and bottom on the intervals
where it is -1.  The tie between intervals and even parts is a labelling
choice only: fiber counts never depend on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from . import weyl_char as wc
from .pairs import CGL, GL, SP, SPR, Parabolic, SymmetricPair, levi_blocks
from .partitions import Partition, c_collapse, is_type_c, normalize, partitions, transpose
from .tableau import SignedTableau, is_valid

ACharacter = tuple[int, ...]  # one +-1 per generator, generators = distinct even parts ascending


class SpringerError(ValueError):
    pass


@dataclass(frozen=True)
class NilpotentOrbitC:
    ambient: str
    partition: Partition

    def __post_init__(self):
        lam = normalize(self.partition)
        object.__setattr__(self, "partition", lam)
        if self.ambient not in (GL, SP):
            raise SpringerError(f"unknown ambient {self.ambient!r}")
        if self.ambient == SP and (sum(lam) % 2 or not is_type_c(lam)):
            raise SpringerError(f"{lam} is not a symplectic partition")

    @property
    def weyl(self) -> wc.WeylType:
        n = sum(self.partition)
        if self.ambient == GL:
            return wc.WeylType(wc.TYPE_A, n)
        return wc.WeylType(wc.TYPE_BC, n // 2)


def component_group_G(orbit: NilpotentOrbitC) -> tuple[int, ...]:
    """Generators of A_G: the distinct even parts (empty for GL)."""
    if orbit.ambient == GL:
        return ()
    return tuple(sorted({p for p in orbit.partition if p % 2 == 0}))


def characters(orbit: NilpotentOrbitC) -> list[ACharacter]:
    k = len(component_group_G(orbit))
    return [tuple(c) for c in product((1, -1), repeat=k)]


# ----------------------------------------------------------------- type C


def carter_bipartition(lam: Sequence[int]) -> wc.Bipartition:
    """Springer representation of (orbit, trivial) for Sp(2n)."""
    parts = sorted(lam)
    if len(parts) % 2 == 0:
        parts = [0] + parts
    vals = [p + i for i, p in enumerate(parts)]
    ev = sorted(v // 2 for v in vals if v % 2 == 0)
    od = sorted((v - 1) // 2 for v in vals if v % 2 == 1)
    if len(ev) != len(od) + 1:
        raise SpringerError(f"{tuple(lam)} is not a symplectic partition")
    alpha = normalize(x - i for i, x in enumerate(ev))
    beta = normalize(x - i for i, x in enumerate(od))
    return alpha, beta


def _symbol(bp: wc.Bipartition, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    alpha, beta = bp
    if len(alpha) > m + 1 or len(beta) > m:
        raise SpringerError("symbol size too small")
    a = sorted(list(alpha) + [0] * (m + 1 - len(alpha)))
    b = sorted(list(beta) + [0] * (m - len(beta)))
    top = tuple(a[i] + 2 * i for i in range(m + 1))
    bot = tuple(b[i] + 2 * i + 1 for i in range(m))
    return top, bot


def _from_symbol(top: Sequence[int], bot: Sequence[int]) -> Optional[wc.Bipartition]:
    top = sorted(top)
    bot = sorted(bot)
    if len(top) != len(bot) + 1:
        return None
    alpha = [x - 2 * i for i, x in enumerate(top)]
    beta = [x - 2 * i - 1 for i, x in enumerate(bot)]
    if any(v < 0 for v in alpha + beta):
        return None
    if any(alpha[i] > alpha[i + 1] for i in range(len(alpha) - 1)):
        return None
    if any(beta[i] > beta[i + 1] for i in range(len(beta) - 1)):
        return None
    return normalize(alpha), normalize(beta)


def symbol_entries(bp: wc.Bipartition, n: int) -> tuple[int, ...]:
    top, bot = _symbol(bp, n)
    return tuple(sorted(top + bot))


def _intervals(top, bot) -> list[list[int]]:
    entries = list(top) + list(bot)
    singles = sorted(x for x in set(entries) if entries.count(x) == 1)
    runs: list[list[int]] = []
    for x in singles:
        if runs and runs[-1][-1] == x - 1:
            runs[-1].append(x)
        else:
            runs.append([x])
    lo = min(entries)
    return [r for r in runs if lo not in r]


@lru_cache(maxsize=None)
def _type_c_table(lam: Partition) -> tuple[tuple[ACharacter, wc.Bipartition], ...]:
    n = sum(lam) // 2
    gens = component_group_G(NilpotentOrbitC(SP, lam))
    base = carter_bipartition(lam)
    top, bot = _symbol(base, n)
    runs = _intervals(top, bot)
    if len(runs) != len(gens):
        raise SpringerError(f"interval count {len(runs)} != {len(gens)} even parts for {lam}")
    out = []
    for psi in product((1, -1), repeat=len(gens)):
        flip = set()
        for r, s in zip(runs, psi):
            if s < 0:
                flip.update(r)
        nt = [x for x in top if x not in flip] + [x for x in bot if x in flip]
        nb = [x for x in bot if x not in flip] + [x for x in top if x in flip]
        bp = _from_symbol(nt, nb)
        if bp is not None:
            out.append((tuple(psi), bp))
    return tuple(out)


# ------------------------------------------------------------- public API


def springer_irrep(orbit: NilpotentOrbitC, psi: ACharacter | None = None) -> Optional[wc.Irrep]:
    """Irreducible W-module attached to (orbit, psi); None if not in the image."""
    gens = component_group_G(orbit)
    if psi is None:
        psi = (1,) * len(gens)
    psi = tuple(psi)
    if len(psi) != len(gens) or any(s not in (1, -1) for s in psi):
        raise SpringerError(f"{psi} is not a character of A_G for {orbit.partition}")
    if orbit.ambient == GL:
        return orbit.partition
    for ch, bp in _type_c_table(orbit.partition):
        if ch == psi:
            return bp
    return None


def springer_rep_full(orbit: NilpotentOrbitC) -> list[tuple[wc.Irrep, ACharacter]]:
    if orbit.ambient == GL:
        return [(orbit.partition, ())]
    return [(bp, ch) for ch, bp in _type_c_table(orbit.partition)]


def nilpotent_orbits(ambient: str, n: int) -> list[NilpotentOrbitC]:
    """Nilpotent orbits of GL(n) or Sp(2n)."""
    if ambient == GL:
        return [NilpotentOrbitC(GL, lam) for lam in partitions(n)]
    return [NilpotentOrbitC(SP, lam) for lam in partitions(2 * n) if is_type_c(lam)]


def ak_image(pair: SymmetricPair, t: SignedTableau) -> tuple[ACharacter, ...]:
    """Generators of the image of A_K in A_G, as 0/1 vectors over A_G's generators."""
    if not is_valid(pair, t):
        raise SpringerError(f"{t} is not valid for {pair}")
    if pair.kind != SPR:
        return ()
    gens = component_group_G(NilpotentOrbitC(SP, t.shape))
    return tuple(tuple(1 if j == i else 0 for j in range(len(gens))) for i in range(len(gens)))


def _trivial_on(psi: ACharacter, image: Sequence[Sequence[int]]) -> bool:
    for g in image:
        val = 1
        for s, e in zip(psi, g):
            if e:
                val *= s
        if val != 1:
            return False
    return True


def sp_invariants(pair: SymmetricPair, t: SignedTableau) -> list[wc.Irrep]:
    """Constituents of Sp(xi)^{A_K}; for cgl each entry is a pair (sigma, sigma)."""
    image = ak_image(pair, t)
    orbit = NilpotentOrbitC(pair.ambient, t.shape)
    out = [sigma for sigma, psi in springer_rep_full(orbit) if _trivial_on(psi, image)]
    if pair.kind == CGL:
        return [(s, s) for s in out]
    return out


def predicted_fiber_size(pair: SymmetricPair, P: Parabolic, t: SignedTableau) -> int:
    W = pair.weyl
    levis = P.levi_types(pair)
    total = 0
    for sigma in sp_invariants(pair, t):
        if pair.kind == CGL:
            m = 1
            for L, s in zip(levis, sigma):
                m *= wc.sign_multiplicity(W, L, s)
        else:
            m = wc.sign_multiplicity(W, levis[0], sigma)
        total += m
    return total


def richardson_partition(ambient: str, n: int, levi: Sequence[int]) -> Partition:
    """Partition of the Richardson orbit of a parabolic (rank-n ambient)."""
    blocks, m = levi_blocks(ambient, n, levi)
    if ambient == GL:
        return transpose(normalize(blocks))
    lam = [1] * (2 * m)
    for a in sorted(blocks, reverse=True):
        lam = sorted(lam, reverse=True) + [0] * max(0, a - len(lam))
        for i in range(a):
            lam[i] += 2
        lam = list(c_collapse(lam))
    return normalize(lam)


def moment_degree(ambient: str, n: int, levi: Sequence[int]) -> int:
    """Generic degree of the moment map of T*P onto its image."""
    lam = richardson_partition(ambient, n, levi)
    orbit = NilpotentOrbitC(ambient, lam)
    W = orbit.weyl
    L = wc.levi_of_parabolic(W, levi)
    return sum(wc.sign_multiplicity(W, L, sigma) for sigma, _ in springer_rep_full(orbit))
