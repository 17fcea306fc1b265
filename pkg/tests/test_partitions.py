import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tensorpi.partitions import (
    Composition,
    Partition,
    all_refinement_groupings,
    contains,
    cycles_of,
    delta,
    integer_part_count,
    is_refinement,
    oplus,
    pad_refines,
    pad_with_ones,
    partitions_of,
    refinement_witness,
    remove_one_box,
    sigma_action,
)


def parts(max_size, max_part=6):
    return st.lists(st.integers(1, max_part), min_size=1, max_size=max_size)


def brute_refines(mu, lam):
    if sum(mu) != sum(lam):
        return False
    for labels in itertools.product(range(len(lam)), repeat=len(mu)):
        sums = [0] * len(lam)
        for part, j in zip(mu, labels):
            sums[j] += part
        if sums == list(lam):
            return True
    return False


def test_partition_normalises():
    assert Partition([1, 3, 2]) == (3, 2, 1)
    assert Partition([3, 1]).weight == 4
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_parse_shorthand():
    assert Partition.parse("5,3,1") == (5, 3, 1)
    assert Partition.parse("2^4") == (2, 2, 2, 2)
    assert Partition.parse("3^2,1") == (3, 3, 1)
    with pytest.raises(ValueError):
        Partition.parse("3,x")


def test_composition_keeps_order_and_zeros():
    a = Composition.parse("1,0,2")
    assert a == (1, 0, 2)
    assert a.to_partition() == (2, 1)


def test_delta():
    assert delta(1) == (1,)
    assert delta(3) == (5, 3, 1)
    assert delta(5).weight == 25


def test_oplus_and_padding():
    assert oplus([3, 1], [2]) == (3, 2, 1)
    assert Partition([3]) + Partition([3, 1]) == (3, 3, 1)
    assert pad_with_ones(Partition([3]), 5) == (3, 1, 1)
    with pytest.raises(ValueError):
        pad_with_ones(Partition([3, 3]), 4)


def test_witness_examples():
    w = refinement_witness([3, 1], [3, 1])
    assert w.describe() == "{3}->3, {1}->1"
    w = refinement_witness([2, 2, 1, 1, 1, 1, 1], [5, 3, 1])
    assert w.group_sums == (5, 3, 1)
    assert refinement_witness([2, 2, 2, 2, 1], [5, 3, 1]) is None
    assert not is_refinement([4, 4, 1], [5, 3, 1])


def test_pad_refines():
    assert pad_refines([3], [5, 3, 1])
    assert pad_refines([4, 3], [5, 3, 1])
    assert not pad_refines([3, 3, 3], [5, 3, 1])
    assert not pad_refines([6], [5, 3, 1])


@settings(max_examples=150, deadline=None)
@given(parts(9, 4), st.data())
def test_refinement_matches_brute_force(mu, data):
    # coarsen mu at random so positive cases show up as often as negative ones
    k = data.draw(st.integers(1, min(3, len(mu))))
    labels = data.draw(st.lists(st.integers(0, k - 1), min_size=len(mu), max_size=len(mu)))
    sums = [0] * k
    for p, j in zip(mu, labels):
        sums[j] += p
    lam = [s for s in sums if s] if data.draw(st.booleans()) else data.draw(parts(3, 12))
    assert is_refinement(mu, lam) == brute_refines(Partition(mu), Partition(lam))


@settings(max_examples=60, deadline=None)
@given(parts(7, 5), parts(4, 10))
def test_witness_is_valid(mu, lam):
    w = refinement_witness(mu, lam)
    if w is None:
        assert not brute_refines(Partition(mu), Partition(lam))
        return
    used = sorted(i for g in w.groups for i in g)
    assert used == list(range(len(w.mu)))
    assert w.group_sums == Partition(lam)


def test_all_refinement_groupings_counts():
    groups = list(all_refinement_groupings((3, 2, 2, 1, 1), (5, 3, 1)))
    for g in groups:
        assert [sum((3, 2, 2, 1, 1)[i] for i in block) for block in g] == [5, 3, 1]
    # 5 = 3+2 twice over, each leaving 3 = 2+1 two ways; plus 5 = 2+2+1 two ways
    assert len(groups) == 6


def test_all_refinement_groupings_none():
    assert list(all_refinement_groupings((3, 3, 3), (5, 3, 1))) == []


def test_integer_part_count():
    assert integer_part_count(3, 2) == 3
    assert integer_part_count(9, 2) == 36
    assert integer_part_count(9, 18) == 0


def test_contains_and_remove_box():
    assert contains([2, 1], [3, 1])
    assert not contains([2, 2], [3, 1])
    assert sorted(remove_one_box([3, 1])) == [(2, 1), (3,)]
    assert remove_one_box([2, 2]) == [(2, 1)]


def test_partitions_of():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list(partitions_of(10))) == 42
    assert list(partitions_of(4, max_len=2)) == [(4,), (3, 1), (2, 2)]


def test_cycles_and_sigma_action():
    assert cycles_of([1, 0, 2]) == [(0, 1), (2,)]
    # the two-cycle glues the parts at slots 0 and 1
    assert sigma_action([1, 0, 2], [3, 2, 1]) == (5, 1)
