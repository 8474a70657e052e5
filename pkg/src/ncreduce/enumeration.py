"""
Exhaustive generation of partition families and exact counting.

Families are selected by a :class:`FamilyFilter` (block count, regularity
bound, noncrossing, poor).  Generation walks restricted growth strings in
lexicographic order and prunes a prefix as soon as it cannot be completed.
All counts are Python integers; nothing here touches floating point except
the INFINITY regularity marker.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .partitions import INFINITY, SetPartition


@dataclass(frozen=True)
class FamilyFilter:
    k: int | None = None
    m: float | int = 1
    noncrossing: bool = False
    poor: bool = False

    def __post_init__(self) -> None:
        if self.k is not None and self.k < 0:
            raise ValueError(f"k must be nonnegative, got {self.k}")
        if not (self.m >= 1 and (self.m == INFINITY or self.m == int(self.m))):
            raise ValueError(f"m must be a positive integer or INFINITY, got {self.m}")


def _rgs(n: int, flt: FamilyFilter) -> Iterator[tuple[int, ...]]:
    k, m = flt.k, flt.m
    noncrossing, poor = flt.noncrossing, flt.poor
    seq = [0] * n
    first: list[int] = []
    last: list[int] = []
    size: list[int] = []

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        # place element i (1-based)
        if i > n:
            if k is None or len(last) == k:
                yield tuple(seq)
            return
        nb = len(last)
        left = n - i  # elements after i
        if k is None or k - nb <= left:
            for b in range(nb):
                lb = last[b]
                if i - lb < m or (poor and size[b] >= 2):
                    continue
                if noncrossing and any(first[a] < lb < last[a] for a in range(nb)):
                    continue
                seq[i - 1] = b + 1
                last[b] = i
                size[b] += 1
                yield from rec(i + 1)
                last[b] = lb
                size[b] -= 1
        if k is None or nb < k and k - nb - 1 <= left:
            seq[i - 1] = nb + 1
            first.append(i)
            last.append(i)
            size.append(1)
            yield from rec(i + 1)
            first.pop()
            last.pop()
            size.pop()

    return rec(1)


def _trusted(n: int, rgs: tuple[int, ...]) -> SetPartition:
    blocks: list[list[int]] = []
    for i, a in enumerate(rgs, 1):
        if a > len(blocks):
            blocks.append([i])
        else:
            blocks[a - 1].append(i)
    return SetPartition(n, tuple(map(tuple, blocks)))


def generate(n: int, flt: FamilyFilter | None = None) -> Iterator[SetPartition]:
    """Yield each partition of [n] matching ``flt`` once, lexicographically by RGS."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    flt = flt or FamilyFilter()
    for rgs in _rgs(n, flt):
        yield _trusted(n, rgs)


def count_family(n: int, flt: FamilyFilter | None = None) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return sum(1 for _ in _rgs(n, flt or FamilyFilter()))


def binomial(n: int, r: int) -> int:
    """C(n, r), zero outside 0 <= r <= n (including every n < 0)."""
    if n < 0 or r < 0 or r > n:
        return 0
    return math.comb(n, r)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def catalan_recurrence(n: int) -> int:
    """C_n from C_{j+1} = sum C_i C_{j-i}; shares no code with :func:`catalan`."""
    c = [1]
    for j in range(n):
        c.append(sum(c[i] * c[j - i] for i in range(j + 1)))
    return c[n]


def narayana(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return math.comb(n, k) * math.comb(n, k - 1) // n


def poor_noncrossing_closed(N: int, K: int) -> int:
    """Closed count of poor noncrossing partitions of [N] with K blocks.

    The N - K pairs form a perfect noncrossing matching on 2(N - K) chosen
    points; the rest are singletons.
    """
    if K > N or 2 * (N - K) > N:
        return 0
    return binomial(N, 2 * (N - K)) * catalan(N - K)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        return 0
    if n == 0 or k == 0:
        return int(n == k)
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def eq4_sum(n: int, k: int) -> int:
    """Narayana number N(n, k) as a Catalan-weighted binomial sum."""
    return sum(
        binomial(n - 1, 2 * i) * binomial(n - 2 * i - 1, n - i - k) * catalan(i)
        for i in range(n - k + 1)
    )


def eq5_sum(n: int, k: int) -> int:
    """N(n, k) summed over the number i of loops left after reduction."""
    return sum(
        binomial(n - 1, i) * poor_noncrossing_closed(n - i - 1, k - 1)
        for i in range(n - k + 1)
    )
