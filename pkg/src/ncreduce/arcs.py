"""
Linear representations of partitions as arc diagrams on vertices 1..n.

An arc ``(i, j)`` with ``i < j`` joins consecutive elements of a block; a
pair ``(i, i)`` is a loop.  Loops only occur on the reduced side of the
noncrossing correspondence and always stand alone at their vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidDiagram, ParseError
from .partitions import SetPartition


@dataclass(frozen=True, slots=True)
class ArcDiagram:
    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        arcs = tuple(sorted({(int(i), int(j)) for i, j in self.arcs}))
        object.__setattr__(self, "arcs", arcs)
        if self.n < 0:
            raise InvalidDiagram(f"negative vertex count {self.n}")
        heads: set[int] = set()
        tails: set[int] = set()
        loops: set[int] = set()
        for i, j in arcs:
            if not 1 <= i <= j <= self.n:
                raise InvalidDiagram(f"arc {(i, j)} not of the form 1 <= i <= j <= {self.n}")
            if i == j:
                loops.add(i)
                continue
            if i in tails:
                raise InvalidDiagram(f"vertex {i} has out-degree > 1")
            if j in heads:
                raise InvalidDiagram(f"vertex {j} has in-degree > 1")
            tails.add(i)
            heads.add(j)
        clash = loops & (heads | tails)
        if clash:
            raise InvalidDiagram(f"looped vertex {min(clash)} carries another arc")

    @classmethod
    def build(cls, n: int, arcs: Iterable[Iterable[int]]) -> "ArcDiagram":
        return cls(n, tuple(tuple(a) for a in arcs))

    @property
    def loops(self) -> tuple[int, ...]:
        return tuple(i for i, j in self.arcs if i == j)

    @property
    def proper_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(a for a in self.arcs if a[0] < a[1])

    def components(self) -> int:
        """Weakly connected components; a loop does not merge anything."""
        return self.n - len(self.proper_arcs)


def from_partition(p: SetPartition) -> ArcDiagram:
    arcs = tuple((x, y) for b in p.blocks for x, y in zip(b, b[1:]))
    return ArcDiagram(p.n, arcs)


def to_partition(d: ArcDiagram) -> SetPartition:
    if d.loops:
        raise InvalidDiagram(f"loop at vertex {d.loops[0]}; not a linear representation")
    succ = dict(d.arcs)
    has_pred = {j for _, j in d.arcs}
    blocks = []
    for v in range(1, d.n + 1):
        if v in has_pred:
            continue
        block = [v]
        while block[-1] in succ:
            block.append(succ[block[-1]])
        blocks.append(tuple(block))
    return SetPartition(d.n, tuple(blocks))


def has_crossing(d: ArcDiagram) -> bool:
    arcs = d.proper_arcs
    for a, (i, j) in enumerate(arcs):
        for u, v in arcs[a + 1:]:
            if i < u < j < v or u < i < v < j:
                return True
    return False


def is_independent(d: ArcDiagram) -> bool:
    used: set[int] = set()
    for i, j in d.arcs:
        ends = {i, j}
        if used & ends:
            return False
        used |= ends
    return True


def to_json(d: ArcDiagram) -> str:
    return json.dumps({"n": d.n, "arcs": [list(a) for a in d.arcs]}, separators=(",", ":"))


def from_json(text: str) -> ArcDiagram:
    try:
        obj = json.loads(text)
        n = obj["n"]
        arcs = obj["arcs"]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed arc diagram JSON: {exc}") from None
    if not isinstance(n, int) or not isinstance(arcs, list):
        raise ParseError("arc diagram JSON needs integer 'n' and list 'arcs'")
    for a in arcs:
        if not (isinstance(a, list) and len(a) == 2 and all(isinstance(x, int) for x in a)):
            raise ParseError(f"malformed arc {a!r}")
    return ArcDiagram.build(n, arcs)


def _heights(d: ArcDiagram) -> dict[tuple[int, int], int]:
    # loops sit at height 1; an arc clears everything strictly inside it
    items = sorted(d.arcs, key=lambda a: a[1] - a[0])
    height: dict[tuple[int, int], int] = {}
    for i, j in items:
        inner = [h for (u, v), h in height.items() if i < u and v < j or (u == v and i < u < j)]
        height[(i, j)] = 1 + max(inner, default=0)
    return height


def render_ascii(d: ArcDiagram) -> str:
    """Draw the diagram above a numbered baseline.

    Each vertex owns a cell ``len(str(n)) + 2`` columns wide: column 0 of the
    cell receives incoming arcs, column 1 outgoing arcs and loops, and the
    label starts at column 1.  An arc at height h is drawn as ``/___\\`` on
    row h with ``|`` legs below it; loops are an ``o`` on row 1.
    """
    w = len(str(d.n)) + 2
    heights = _heights(d)
    top = max(heights.values(), default=0)
    width = max(d.n * w, 1)
    rows = [[" "] * width for _ in range(top + 1)]

    def out_col(v: int) -> int:
        return (v - 1) * w + 1

    def in_col(v: int) -> int:
        return (v - 1) * w

    for (i, j), h in heights.items():
        if i == j:
            rows[1][out_col(i)] = "o"
            continue
        a, b = out_col(i), in_col(j)
        for r in range(1, h):
            rows[r][a] = "|"
            rows[r][b] = "|"
        rows[h][a] = "/"
        rows[h][b] = "\\"
        for c in range(a + 1, b):
            rows[h][c] = "_"
    base = "".join(" " + str(v).ljust(w - 1) for v in range(1, d.n + 1))
    lines = ["".join(r).rstrip() for r in reversed(rows[1:])]
    lines.append(base.rstrip())
    return "\n".join(lines)
