"""Integer partitions and Robinson-Schensted insertion."""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

Partition = tuple[int, ...]


def normalize(parts: Iterable[int]) -> Partition:
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def transpose(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when lam >= mu in dominance order (equal sizes assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def multiplicities(lam: Sequence[int]) -> dict[int, int]:
    m: dict[int, int] = {}
    for p in lam:
        m[p] = m.get(p, 0) + 1
    return m


def hook_length_count(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape lam."""
    n = sum(lam)
    lt = transpose(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (lt[j] - i - 1) + 1
    return factorial(n) // prod


def centralizer_order(lam: Sequence[int]) -> int:
    """|C_{S_n}(w)| for w of cycle type lam."""
    z = 1
    for k, m in multiplicities(lam).items():
        z *= k**m * factorial(m)
    return z


def rs_insert(word: Sequence[int]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-insertion Robinson-Schensted; returns (P, Q) tableaux."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            pos = next((i for i, y in enumerate(row) if y > x), None)
            if pos is None:
                row.append(x)
                Q[r].append(step)
                break
            row[pos], x = x, row[pos]
            r += 1
    return P, Q


def rs_shape(word: Sequence[int]) -> Partition:
    P, _ = rs_insert(word)
    return tuple(len(r) for r in P)


def c_collapse(lam: Sequence[int]) -> Partition:
    """Largest type-C partition dominated by lam (odd parts even multiplicity)."""
    parts = list(normalize(lam))
    while True:
        mult = multiplicities(parts)
        bad = [q for q, m in mult.items() if q % 2 == 1 and m % 2 == 1]
        if not bad:
            return normalize(parts)
        q = max(bad)
        last = max(i for i, p in enumerate(parts) if p == q)
        parts[last] -= 1
        # raise the first later part r < q - 1
        for j in range(last + 1, len(parts) + 1):
            if j == len(parts):
                parts.append(1)
                break
            if parts[j] < q - 1:
                parts[j] += 1
                break
        parts = list(normalize(parts))


def is_type_c(lam: Sequence[int]) -> bool:
    return all(m % 2 == 0 for q, m in multiplicities(lam).items() if q % 2 == 1)
