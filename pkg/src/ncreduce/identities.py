"""
Exhaustive verification of the counting identities behind the reduction.

Each ``verify_*`` function sweeps a range of independent parameter cells and
yields one :class:`VerificationReport` per cell, ordered by cell key.  A
failing cell is reported, never raised.  Sweeps accept ``jobs`` to spread
cells over worker processes; merged output is identical for any job count.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .enumeration import (
    FamilyFilter,
    binomial,
    catalan_recurrence,
    count_family,
    eq4_sum,
    eq5_sum,
    generate,
    narayana,
    poor_noncrossing_closed,
)
from .motzkin import all_paths, partition_to_path, path_to_partition
from .partitions import is_noncrossing, is_poor
from .reduction import expand_partition, reduce_noncrossing, reduce_partition

Cell = tuple


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    n: int
    k: int | None
    m: int | None
    lhs: int
    rhs: int
    roundtrip: bool = True

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs and self.roundtrip

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def empty(self) -> bool:
        """Both sides count an empty family; the identity holds vacuously."""
        return self.lhs == 0 and self.rhs == 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "identity": self.identity,
                "n": self.n,
                "k": self.k,
                "m": self.m,
                "lhs": str(self.lhs),
                "rhs": str(self.rhs),
                "roundtrip": self.roundtrip,
                "status": self.status,
            },
            separators=(",", ":"),
        )


def _run(check: Callable[[Cell], VerificationReport], cells: Sequence[Cell], jobs: int) -> Iterator[VerificationReport]:
    cells = sorted(cells, key=lambda c: tuple(-1 if x is None else x for x in c))
    if jobs <= 1:
        for cell in cells:
            yield check(cell)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order, so output never depends on scheduling
        yield from pool.map(check, cells, chunksize=4)


def _nkm_cells(n_max: int) -> list[Cell]:
    return [(n, k, m) for n in range(2, n_max + 1) for k in range(1, n + 1) for m in range(2, n + 1)]


def _bijection_cell(identity: str, cell: Cell, noncrossing: bool) -> VerificationReport:
    n, k, m = cell
    left = list(generate(n, FamilyFilter(k=k, m=m, noncrossing=noncrossing)))
    right = list(generate(n - 1, FamilyFilter(k=k - 1, m=m - 1, noncrossing=noncrossing, poor=noncrossing)))
    left_set, right_set = set(left), set(right)
    ok = True
    images = set()
    for p in left:
        q = reduce_partition(p)
        images.add(q)
        if expand_partition(q) != p or q not in right_set:
            ok = False
        if noncrossing and not (is_poor(q) and is_noncrossing(q)):
            ok = False
    for q in right:
        p = expand_partition(q)
        if reduce_partition(p) != q or p not in left_set:
            ok = False
    if images != right_set:
        ok = False
    return VerificationReport(identity, n, k, m, len(left), len(right), ok)


def _eq2_cell(cell: Cell) -> VerificationReport:
    return _bijection_cell("eq2", cell, noncrossing=False)


def _eq3_cell(cell: Cell) -> VerificationReport:
    return _bijection_cell("eq3", cell, noncrossing=True)


def verify_eq2(n_max: int, jobs: int = 1) -> Iterator[VerificationReport]:
    """p(n, k, m) = p(n-1, k-1, m-1) for m >= 2, checked member by member."""
    return _run(_eq2_cell, _nkm_cells(n_max), jobs)


def verify_eq3(n_max: int, jobs: int = 1) -> Iterator[VerificationReport]:
    """Noncrossing m-regular partitions against poor noncrossing (m-1)-regular ones."""
    return _run(_eq3_cell, _nkm_cells(n_max), jobs)


def _narayana_cell(cell: Cell) -> VerificationReport:
    n, k, brute = cell
    ok = True
    if brute:
        ok = count_family(n, FamilyFilter(k=k, noncrossing=True)) == narayana(n, k)
    return VerificationReport("narayana", n, k, None, narayana(n, k), eq4_sum(n, k), ok)


def verify_narayana(n_max: int, brute_max: int = 11, jobs: int = 1) -> Iterator[VerificationReport]:
    """Narayana closed form against the Catalan sum.

    ``roundtrip`` carries the brute-force cross-check against the number of
    noncrossing partitions for n <= brute_max (vacuously true above it).
    """
    cells = [(n, k, n <= brute_max) for n in range(1, n_max + 1) for k in range(1, n + 1)]
    return _run(_narayana_cell, cells, jobs)


def loop_census(n: int, k: int) -> Counter:
    """Noncrossing partitions of [n] with k blocks, tallied by loops after reduction."""
    tally: Counter = Counter()
    for p in generate(n, FamilyFilter(k=k, noncrossing=True)):
        tally[len(reduce_noncrossing(p).loops)] += 1
    return tally


def _eq5_cell(cell: Cell) -> VerificationReport:
    n, k, census = cell
    ok = True
    if census:
        tally = loop_census(n, k)
        for i in range(n - k + 1):
            if tally.get(i, 0) != binomial(n - 1, i) * poor_noncrossing_closed(n - i - 1, k - 1):
                ok = False
        if any(i > n - k for i in tally):
            ok = False
    return VerificationReport("eq5", n, k, None, narayana(n, k), eq5_sum(n, k), ok)


def verify_eq5(n_max: int, census_max: int = 10, jobs: int = 1) -> Iterator[VerificationReport]:
    """Narayana numbers split by loop count; ``roundtrip`` is the loop census for n <= census_max."""
    cells = [(n, k, n <= census_max) for n in range(1, n_max + 1) for k in range(1, n + 1)]
    return _run(_eq5_cell, cells, jobs)


def _motzkin_cell(cell: Cell) -> VerificationReport:
    n, k = cell
    if k is None:
        total = count_family(n, FamilyFilter(noncrossing=True))
        return VerificationReport("motzkin", n, None, None, total, catalan_recurrence(n), True)
    ok = True
    paths = set()
    members = 0
    for p in generate(n, FamilyFilter(k=k, noncrossing=True)):
        members += 1
        path = partition_to_path(p)
        paths.add(path)
        if len(path) != n - 1 or path.census() != n - k or path_to_partition(path) != p:
            ok = False
    expected = [q for q in all_paths(n - 1) if q.census() == n - k]
    for q in expected:
        if partition_to_path(path_to_partition(q)) != q:
            ok = False
    if paths != set(expected):
        ok = False
    return VerificationReport("motzkin", n, k, None, members, len(expected), ok)


def verify_motzkin(n_max: int, jobs: int = 1) -> Iterator[VerificationReport]:
    """Per-(n, k) bijection with paths having n-k steps in {L, U}; k=None rows compare totals with Catalan."""
    cells = [(n, k) for n in range(1, n_max + 1) for k in [None, *range(1, n + 1)]]
    return _run(_motzkin_cell, cells, jobs)


def rna_table(n: int) -> dict[int, int]:
    """Secondary structures on n positions counted by number of base pairs."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return {
        pairs: count_family(n, FamilyFilter(k=n - pairs, m=2, noncrossing=True, poor=True))
        for pairs in range(n // 2 + 1)
    }


def _rna_cell(cell: Cell) -> VerificationReport:
    n, pairs = cell
    lhs = count_family(n, FamilyFilter(k=n - pairs, m=2, noncrossing=True, poor=True))
    rhs = count_family(n + 1, FamilyFilter(k=n - pairs + 1, m=3, noncrossing=True))
    return VerificationReport("rna", n, pairs, 2, lhs, rhs, True)


def verify_rna(n_max: int, jobs: int = 1) -> Iterator[VerificationReport]:
    """Structures with ``k`` pairs (report field k) against 3-regular noncrossing partitions of [n+1]."""
    cells = [(n, pairs) for n in range(1, n_max + 1) for pairs in range(n + 1)]
    return _run(_rna_cell, cells, jobs)


VERIFIERS: dict[str, Callable[..., Iterator[VerificationReport]]] = {
    "eq2": verify_eq2,
    "eq3": verify_eq3,
    "narayana": verify_narayana,
    "eq5": verify_eq5,
    "motzkin": verify_motzkin,
    "rna": verify_rna,
}


def failures(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    return [r for r in reports if not r.passed]
