"""
Set partitions of [n] = {1, ..., n} and their canonical sequences.

A partition is stored as a tuple of blocks, each block a strictly increasing
tuple of integers, blocks ordered by their minimum element.  The canonical
sequence (restricted growth string) ``a_1 ... a_n`` sets ``a_i = j`` when
``i`` lies in the ``j``-th block.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidGrowth, ParseError

# Regularity of an all-singleton partition; compares above every finite m.
INFINITY = math.inf

_BLOCK_RE = re.compile(r"\(([^()]*)\)")
_INT_RE = re.compile(r"0|[1-9][0-9]*")


@dataclass(frozen=True, slots=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if self.n < 0:
            raise ParseError(f"negative ground set size {self.n}")
        seen: set[int] = set()
        prev_min = 0
        for b in blocks:
            if not b:
                raise ParseError("empty block")
            if b[0] <= prev_min:
                raise ParseError("blocks not ordered by minimum element")
            prev_min = b[0]
            for x, y in zip(b, b[1:]):
                if x >= y:
                    raise ParseError(f"block {b} is not strictly increasing")
            for x in b:
                if not 1 <= x <= self.n:
                    raise ParseError(f"element {x} outside [1, {self.n}]")
                if x in seen:
                    raise ParseError(f"duplicate element {x}")
                seen.add(x)
        if len(seen) != self.n:
            raise ParseError(f"blocks do not cover [1, {self.n}]")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "SetPartition":
        """Normalize arbitrary block order; ``n`` defaults to the largest element."""
        bs = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in bs):
            raise ParseError("empty block")
        bs.sort(key=lambda b: b[0])
        if n is None:
            n = max((b[-1] for b in bs), default=0)
        return cls(n, tuple(bs))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True, slots=True)
class CanonicalSequence:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        top = 0
        for i, a in enumerate(entries, 1):
            if a < 1:
                raise InvalidGrowth(f"entry {a} at position {i} is not positive")
            if a > top + 1:
                raise InvalidGrowth(
                    f"entry {a} at position {i} precedes first occurrence of {top + 1}"
                )
            top = max(top, a)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return format_canonical(self)


def parse_partition(text: str) -> SetPartition:
    """Parse block notation such as ``(1,4)(2,5,7)(3)(6)``."""
    if not text:
        raise ParseError("empty input")
    pos = 0
    blocks = []
    for match in _BLOCK_RE.finditer(text):
        if match.start() != pos:
            raise ParseError(f"unexpected text at offset {pos}: {text[pos:match.start()]!r}")
        pos = match.end()
        items = match.group(1).split(",")
        block = []
        for item in items:
            if not _INT_RE.fullmatch(item):
                raise ParseError(f"malformed element {item!r}")
            block.append(int(item))
        blocks.append(block)
    if pos != len(text) or not blocks:
        raise ParseError(f"unexpected text at offset {pos}: {text[pos:]!r}")
    elements = [x for b in blocks for x in b]
    if len(set(elements)) != len(elements):
        dup = next(x for x in elements if elements.count(x) > 1)
        raise ParseError(f"duplicate element {dup}")
    if min(elements) < 1:
        raise ParseError("element 0 out of range")
    return SetPartition.from_blocks(blocks)


def format_partition(p: SetPartition) -> str:
    return "".join("(" + ",".join(map(str, b)) + ")" for b in p.blocks)


def to_canonical(p: SetPartition) -> CanonicalSequence:
    seq = [0] * p.n
    for j, block in enumerate(p.blocks, 1):
        for x in block:
            seq[x - 1] = j
    return CanonicalSequence(tuple(seq))


def from_canonical(s: CanonicalSequence | Sequence[int]) -> SetPartition:
    if not isinstance(s, CanonicalSequence):
        s = CanonicalSequence(tuple(s))
    blocks: list[list[int]] = []
    for i, a in enumerate(s.entries, 1):
        if a > len(blocks):
            blocks.append([])
        blocks[a - 1].append(i)
    return SetPartition(len(s.entries), tuple(map(tuple, blocks)))


def parse_canonical(text: str) -> CanonicalSequence:
    """Accept either a digit string (``1231242``) or comma-separated integers."""
    text = text.strip()
    if not text:
        return CanonicalSequence(())
    if "," in text:
        parts = text.split(",")
    elif text.isdigit():
        parts = list(text)
    else:
        raise ParseError(f"malformed canonical sequence {text!r}")
    if not all(_INT_RE.fullmatch(x) for x in parts):
        raise ParseError(f"malformed canonical sequence {text!r}")
    return CanonicalSequence(tuple(int(x) for x in parts))


def format_canonical(s: CanonicalSequence) -> str:
    if all(a <= 9 for a in s.entries):
        return "".join(map(str, s.entries))
    return ",".join(map(str, s.entries))


def regularity(p: SetPartition) -> float | int:
    """Smallest gap between consecutive elements of a block, or INFINITY."""
    gaps = [y - x for b in p.blocks for x, y in zip(b, b[1:])]
    return min(gaps) if gaps else INFINITY


def is_m_regular(p: SetPartition, m: float | int) -> bool:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return regularity(p) >= m


def is_poor(p: SetPartition) -> bool:
    return all(len(b) <= 2 for b in p.blocks)


def is_noncrossing(p: SetPartition) -> bool:
    """Direct test for x < u < y < v with {x, y} and {u, v} in different blocks."""
    blocks = [b for b in p.blocks if len(b) >= 2]
    for A in blocks:
        lo = A[0]
        for B in blocks:
            if A is B:
                continue
            top = B[-1]
            for u in B:
                if u <= lo:
                    continue
                # need y in A with u < y < some v in B
                if any(u < y < top for y in A):
                    return False
    return True


def is_abab_free(s: CanonicalSequence | Sequence[int]) -> bool:
    """Scan for the pattern a..b..a..b using first/last occurrence positions.

    When symbol ``b`` reappears, an ``abab`` occurrence ends here iff some
    symbol ``a`` straddles the previous ``b``: first(a) < last(b) < last(a).
    """
    entries = s.entries if isinstance(s, CanonicalSequence) else tuple(s)
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, b in enumerate(entries):
        if b in last:
            lb = last[b]
            for a, la in last.items():
                if la > lb and first[a] < lb:
                    return False
        else:
            first[b] = i
        last[b] = i
    return True
