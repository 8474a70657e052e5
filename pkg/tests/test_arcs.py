import pytest

from ncreduce.arcs import (
    ArcDiagram,
    from_json,
    from_partition,
    has_crossing,
    is_independent,
    render_ascii,
    to_json,
    to_partition,
)
from ncreduce.errors import InvalidDiagram, ParseError
from ncreduce.partitions import SetPartition, is_noncrossing, parse_partition

from oracles import all_partitions


def D(n, *arcs):
    return ArcDiagram.build(n, arcs)


def test_from_partition_examples():
    assert from_partition(parse_partition("(1,5)(2,4)(3)")) == D(5, (1, 5), (2, 4))
    assert from_partition(parse_partition("(1)(2)(3)")) == D(3)
    assert from_partition(parse_partition("(1,4)(2,5,7)(3)(6)")).arcs == ((1, 4), (2, 5), (5, 7))


def test_to_partition_examples():
    assert str(to_partition(D(4, (1, 4), (2, 3)))) == "(1,4)(2,3)"
    assert str(to_partition(D(3))) == "(1)(2)(3)"
    assert str(to_partition(D(4, (1, 3), (3, 4)))) == "(1,3,4)(2)"


def test_to_partition_rejects_loops():
    with pytest.raises(InvalidDiagram):
        to_partition(D(2, (1, 1)))


@pytest.mark.parametrize(
    "n, arcs",
    [
        (3, [(1, 2), (1, 3)]),  # out-degree 2
        (3, [(1, 3), (2, 3)]),  # in-degree 2
        (3, [(2, 1)]),  # right-to-left
        (3, [(1, 4)]),  # out of range
        (3, [(1, 1), (1, 2)]),  # loop sharing a vertex
        (3, [(1, 2), (2, 2)]),
    ],
)
def test_invariant_violations(n, arcs):
    with pytest.raises(InvalidDiagram):
        ArcDiagram.build(n, arcs)


def test_has_crossing():
    assert has_crossing(D(5, (1, 4), (2, 5)))
    assert not has_crossing(D(5, (1, 5), (2, 4)))
    assert not has_crossing(D(5, (1, 1), (2, 5), (3, 3)))
    assert not has_crossing(D(5, (1, 3), (3, 5)))  # shared endpoint


def test_is_independent():
    assert is_independent(D(5, (1, 1), (2, 5), (3, 3)))
    assert not is_independent(D(4, (1, 3), (3, 4)))
    assert is_independent(D(1))


def test_json_roundtrip():
    d = D(5, (3, 3), (2, 5), (1, 1))
    text = to_json(d)
    assert text == '{"n":5,"arcs":[[1,1],[2,5],[3,3]]}'
    assert from_json(text) == d
    assert from_json('{"n": 5, "arcs": [[2, 5], [1, 1], [3, 3]]}') == d
    for bad in ["", "[]", '{"n":2}', '{"n":2,"arcs":[[1]]}', '{"n":"2","arcs":[]}']:
        with pytest.raises(ParseError):
            from_json(bad)


@pytest.mark.parametrize("n", range(0, 10))
def test_exhaustive_linear_representation(n):
    for blocks in all_partitions(n):
        p = SetPartition(n, blocks)
        d = from_partition(p)
        assert to_partition(d) == p
        assert d.components() == p.k
        assert not d.loops
        assert has_crossing(d) == (not is_noncrossing(p))


def test_render_single_arc():
    lines = render_ascii(D(4, (2, 4))).splitlines()
    assert lines == ["    /____\\", " 1  2  3  4"]


def test_render_loop():
    assert render_ascii(D(1, (1, 1))).splitlines() == [" o", " 1"]


def test_render_nesting():
    lines = render_ascii(D(5, (1, 5), (2, 4))).splitlines()
    assert len(lines) == 3
    # outer arc on the top row, inner arc one row lower
    assert lines[0].strip().startswith("/") and lines[0].index("/") == 1
    assert lines[1].index("/") == 4
    assert lines[1][1] == "|"


def test_render_deterministic_and_wide():
    d = from_partition(parse_partition("(1,12)(2,3)(4)(5)(6)(7)(8)(9)(10)(11)"))
    text = render_ascii(d)
    assert text == render_ascii(d)
    assert text.splitlines()[-1].split() == [str(v) for v in range(1, 13)]
