"""
The reduction algorithm and its inverse.

Reduction shortens every arc ``(i, j)`` to ``(i, j - 1)`` and deletes vertex
``n``.  On partitions of regularity at least 2 this is a bijection
P(n, k, m) -> P(n - 1, k - 1, m - 1); on noncrossing partitions of any
regularity it yields independent noncrossing arcs and loops.
"""

from __future__ import annotations

from .arcs import ArcDiagram, from_partition, has_crossing, is_independent, to_partition
from .errors import InvalidDiagram, NotNoncrossing, NotReducible, NotTwoRegular
from .partitions import SetPartition, is_noncrossing, regularity


def reduce_arcs(d: ArcDiagram) -> ArcDiagram:
    if d.n == 0:
        raise InvalidDiagram("cannot reduce a diagram with no vertices")
    if d.loops:
        raise InvalidDiagram("reduce_arcs expects a loop-free linear representation")
    shifted = [(i, j - 1) for i, j in d.arcs]
    if any(i == d.n or j == d.n for i, j in shifted):
        raise NotReducible(f"vertex {d.n} is not isolated after shortening arcs")
    try:
        return ArcDiagram(d.n - 1, tuple(shifted))
    except InvalidDiagram as exc:
        raise NotReducible(str(exc)) from None


def expand_arcs(d: ArcDiagram) -> ArcDiagram:
    """Inverse of :func:`reduce_arcs`: ``(i, j) -> (i, j + 1)`` plus a new last vertex.

    Loops become arcs ``(i, i + 1)``.
    """
    lengthened = tuple((i, j + 1) for i, j in d.arcs)
    heads = [j for _, j in lengthened]
    tails = [i for i, _ in lengthened]
    if len(set(heads)) != len(heads) or len(set(tails)) != len(tails):
        raise InvalidDiagram("expansion gives two arcs with a shared head or tail")
    return ArcDiagram(d.n + 1, lengthened)


def reduce_partition(p: SetPartition) -> SetPartition:
    if p.n < 1:
        raise InvalidDiagram("cannot reduce the empty partition")
    if regularity(p) < 2:
        raise NotTwoRegular(f"{p} is not 2-regular")
    return to_partition(reduce_arcs(from_partition(p)))


def expand_partition(q: SetPartition) -> SetPartition:
    return to_partition(expand_arcs(from_partition(q)))


def reduce_noncrossing(p: SetPartition) -> ArcDiagram:
    if p.n < 1:
        raise InvalidDiagram("cannot reduce the empty partition")
    if not is_noncrossing(p):
        raise NotNoncrossing(f"{p} is not noncrossing")
    return reduce_arcs(from_partition(p))


def expand_independent(d: ArcDiagram) -> SetPartition:
    if not is_independent(d):
        raise InvalidDiagram("arcs are not pairwise vertex-disjoint")
    if has_crossing(d):
        raise InvalidDiagram("arcs cross")
    return to_partition(expand_arcs(d))
