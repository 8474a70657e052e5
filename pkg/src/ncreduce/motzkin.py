"""
2-Motzkin paths and their correspondence with noncrossing partitions.

Steps are ``U`` (up), ``D`` (down), ``L`` (straight level) and ``W`` (wavy
level).  Reading an independent noncrossing arc diagram vertex by vertex,
a loop gives ``L``, an isolated vertex ``W``, a left endpoint ``U`` and a
right endpoint ``D``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .arcs import ArcDiagram, has_crossing, is_independent
from .errors import InvalidDiagram, InvalidPath
from .partitions import SetPartition
from .reduction import expand_independent, reduce_noncrossing

STEPS = "UDLW"


@dataclass(frozen=True, slots=True)
class TwoMotzkinPath:
    steps: str

    def __post_init__(self) -> None:
        if not validate_path(self.steps):
            raise InvalidPath(f"{self.steps!r} is not a 2-Motzkin path")

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def census(self) -> int:
        """Number of steps in {L, U}."""
        return self.steps.count("L") + self.steps.count("U")


def parse_path(text: str) -> TwoMotzkinPath:
    steps = text.strip().upper()
    bad = set(steps) - set(STEPS)
    if bad:
        raise InvalidPath(f"unknown step symbol(s) {''.join(sorted(bad))!r}")
    return TwoMotzkinPath(steps)


def validate_path(steps: Iterable[str]) -> bool:
    height = 0
    for s in steps:
        if s not in STEPS:
            raise InvalidPath(f"unknown step symbol {s!r}")
        if s == "U":
            height += 1
        elif s == "D":
            height -= 1
            if height < 0:
                return False
    return height == 0


def diagram_to_path(d: ArcDiagram) -> TwoMotzkinPath:
    if not is_independent(d) or has_crossing(d):
        raise InvalidDiagram("need pairwise independent noncrossing arcs")
    steps = ["W"] * d.n
    for i, j in d.arcs:
        if i == j:
            steps[i - 1] = "L"
        else:
            steps[i - 1] = "U"
            steps[j - 1] = "D"
    return TwoMotzkinPath("".join(steps))


def path_to_diagram(path: TwoMotzkinPath | str) -> ArcDiagram:
    steps = path.steps if isinstance(path, TwoMotzkinPath) else path
    if not validate_path(steps):
        raise InvalidPath(f"{steps!r} is not a 2-Motzkin path")
    arcs = []
    stack: list[int] = []
    for v, s in enumerate(steps, 1):
        if s == "L":
            arcs.append((v, v))
        elif s == "U":
            stack.append(v)
        elif s == "D":
            arcs.append((stack.pop(), v))
    return ArcDiagram(len(steps), tuple(arcs))


def partition_to_path(p: SetPartition) -> TwoMotzkinPath:
    return diagram_to_path(reduce_noncrossing(p))


def path_to_partition(path: TwoMotzkinPath | str) -> SetPartition:
    return expand_independent(path_to_diagram(path))


def all_paths(length: int) -> Iterator[TwoMotzkinPath]:
    """Every 2-Motzkin path of the given length, built step by step."""
    out: list[str] = []

    def rec(remaining: int, height: int) -> Iterator[str]:
        if remaining == 0:
            yield "".join(out)
            return
        for s in STEPS:
            if s == "D" and height == 0:
                continue
            h = height + (s == "U") - (s == "D")
            if h > remaining - 1:
                continue
            out.append(s)
            yield from rec(remaining - 1, h)
            out.pop()

    for steps in rec(length, 0):
        yield TwoMotzkinPath(steps)
