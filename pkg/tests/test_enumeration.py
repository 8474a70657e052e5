import pytest

from ncreduce.enumeration import (
    FamilyFilter,
    binomial,
    catalan,
    catalan_recurrence,
    count_family,
    eq4_sum,
    eq5_sum,
    generate,
    narayana,
    poor_noncrossing_closed,
    stirling2,
)
from ncreduce.partitions import INFINITY, to_canonical

from oracles import all_partitions, bell, count_brute, crosses, min_gap, pascal, segner

FIGURE1_LEFT = {
    "(1,3)(2,4)(5)",
    "(1,3)(2,5)(4)",
    "(1,3,5)(2)(4)",
    "(1,4)(2,5)(3)",
    "(1,4)(2)(3,5)",
    "(1)(2,4)(3,5)",
    "(1,5)(2,4)(3)",
}


def test_generate_figure1_family():
    got = [str(p) for p in generate(5, FamilyFilter(k=3, m=2))]
    assert len(got) == 7 and set(got) == FIGURE1_LEFT
    rgs = [to_canonical(p).entries for p in generate(5, FamilyFilter(k=3, m=2))]
    assert rgs == sorted(rgs)


def test_generate_noncrossing_example():
    got = {str(p) for p in generate(5, FamilyFilter(k=3, m=2, noncrossing=True))}
    assert got == {"(1,3,5)(2)(4)", "(1,5)(2,4)(3)"}


def test_generate_small():
    assert [str(p) for p in generate(1)] == ["(1)"]
    assert [p.n for p in generate(0)] == [0]
    assert list(generate(3, FamilyFilter(k=4))) == []


def test_infinite_regularity_filter():
    assert [str(p) for p in generate(4, FamilyFilter(m=INFINITY))] == ["(1)(2)(3)(4)"]
    assert count_family(4, FamilyFilter(k=3, m=INFINITY)) == 0


def test_filter_validation():
    with pytest.raises(ValueError):
        FamilyFilter(m=0)
    with pytest.raises(ValueError):
        FamilyFilter(m=1.5)
    with pytest.raises(ValueError):
        FamilyFilter(k=-1)


def test_count_examples():
    assert count_family(5, FamilyFilter(k=3, m=2)) == 7
    assert count_family(5, FamilyFilter(k=3, m=2, noncrossing=True)) == 2
    assert count_family(4) == 15 == bell(4)


@pytest.mark.parametrize("n", range(0, 10))
def test_pruned_equals_filtered(n):
    everything = list(generate(n))
    assert len(everything) == len(set(everything)) == bell(n)
    for k in [None, *range(n + 1)]:
        for m in [1, 2, 3, INFINITY]:
            for nc in (False, True):
                for poor in (False, True):
                    flt = FamilyFilter(k=k, m=m, noncrossing=nc, poor=poor)
                    got = list(generate(n, flt))
                    want = [
                        p for p in everything
                        if (k is None or p.k == k)
                        and min_gap(p.blocks) >= m
                        and not (nc and crosses(p.blocks))
                        and not (poor and any(len(b) > 2 for b in p.blocks))
                    ]
                    assert got == want


def test_generator_deterministic():
    flt = FamilyFilter(m=2, noncrossing=True)
    assert list(generate(9, flt)) == list(generate(9, flt))


def test_binomial():
    assert binomial(3, 2) == 3
    assert binomial(3, 4) == 0
    assert binomial(52, 5) == 2598960 == pascal(52, 5)
    assert binomial(-1, 0) == 0
    assert binomial(4, -1) == 0
    for n in range(20):
        for r in range(-2, n + 3):
            assert binomial(n, r) == pascal(n, r)


def test_catalan():
    assert catalan(0) == 1
    assert catalan(3) == 5 == count_brute(3, noncrossing=True)
    assert catalan(10) == 16796 == segner(10)
    assert all(catalan(n) == catalan_recurrence(n) == segner(n) for n in range(30))


def test_narayana():
    assert narayana(4, 2) == 6 == count_brute(4, k=2, noncrossing=True)
    assert all(narayana(n, 1) == 1 == narayana(n, n) for n in range(1, 30))
    with pytest.raises(ValueError):
        narayana(3, 0)
    with pytest.raises(ValueError):
        narayana(3, 4)
    for n in range(1, 17):
        assert sum(narayana(n, k) for k in range(1, n + 1)) == catalan(n)


def test_poor_noncrossing_closed():
    assert poor_noncrossing_closed(4, 2) == 2
    assert all(poor_noncrossing_closed(N, N) == 1 for N in range(20))
    assert poor_noncrossing_closed(6, 3) == 5 == count_brute(6, k=3, noncrossing=True, poor=True)
    assert poor_noncrossing_closed(3, 1) == 0
    assert poor_noncrossing_closed(2, 3) == 0


@pytest.mark.parametrize("N", range(0, 10))
def test_poor_noncrossing_against_brute(N):
    for K in range(N + 2):
        assert poor_noncrossing_closed(N, K) == count_brute(N, k=K, noncrossing=True, poor=True)


def test_stirling2():
    assert stirling2(4, 2) == 7
    assert all(stirling2(n, n) == 1 for n in range(20))
    assert stirling2(5, 3) == 25 == count_family(5, FamilyFilter(k=3))
    for n in range(10):
        assert sum(stirling2(n, k) for k in range(n + 1)) == bell(n)


def test_eq4_terms():
    # i = 0, 1, 2 contribute 3 + 3 + 0
    assert eq4_sum(4, 2) == 6
    assert all(eq4_sum(n, n) == 1 for n in range(1, 20))
    assert eq4_sum(14, 7) == narayana(14, 7)


def test_eq5_values():
    assert eq5_sum(5, 3) == narayana(5, 3) == 20 == count_brute(5, k=3, noncrossing=True)
    assert all(eq5_sum(n, 1) == 1 for n in range(1, 20))
    assert eq5_sum(6, 3) == narayana(6, 3)
