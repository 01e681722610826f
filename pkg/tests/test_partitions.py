"""Partition primitives and boundary nodes."""

import pytest
from hypothesis import given, strategies as st

from ecrystal.partitions import (
    ADDABLE,
    REMOVABLE,
    Multipartition,
    add_node,
    boundary_nodes,
    check_partition,
    conjugate,
    contains,
    e_restricted_partitions,
    is_e_restricted,
    partitions_of,
    remove_node,
    residue,
)

partitions_st = st.lists(st.integers(1, 12), max_size=8).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


def test_check_partition_normalizes():
    assert check_partition([3, 2, 0, 0]) == (3, 2)
    assert check_partition(()) == ()
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, -1))


def test_is_e_restricted():
    assert is_e_restricted((2, 2, 1), 3)
    assert not is_e_restricted((3,), 3)
    assert not is_e_restricted((4, 1), 3)
    assert is_e_restricted((), 2)
    with pytest.raises(ValueError):
        is_e_restricted((1,), 1)


@given(partitions_st)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam


def test_contains():
    assert contains((3, 2), (2, 2))
    assert not contains((3, 2), (1, 1, 1))
    assert contains((1,), ())


def test_boundary_nodes_empty():
    assert boundary_nodes((), 0, 3, 0) == [((0, 0), ADDABLE)]
    assert boundary_nodes((), 0, 3, 1) == []


def test_boundary_nodes_311():
    # residues at m=0, e=3: addable 0-nodes in rows 0, 1 and 3
    out = boundary_nodes((3, 1, 1), 0, 3, 0)
    assert [tag for _, tag in out] == [ADDABLE, ADDABLE, ADDABLE]
    assert [node[0] for node, _ in out] == [0, 1, 3]


def test_boundary_nodes_single_box():
    assert boundary_nodes((1,), 0, 3, 1) == [((0, 1), ADDABLE)]


@given(partitions_st, st.integers(0, 3), st.integers(2, 4))
def test_boundary_rows_strictly_increase(lam, m, e):
    for i in range(e):
        out = boundary_nodes(lam, m, e, i)
        rows = [node[0] for node, _ in out]
        assert rows == sorted(set(rows))
        for (r, c), tag in out:
            assert residue(r, c, m, e) == i
            if tag == REMOVABLE:
                # deleting the box keeps a partition
                assert remove_node(lam, r) == check_partition(
                    lam[:r] + (lam[r] - 1,) + lam[r + 1:]
                )
            else:
                assert check_partition(sorted(add_node(lam, r), reverse=True)) == add_node(lam, r)


def test_enumeration_counts():
    assert sum(1 for _ in partitions_of(5)) == 7
    assert list(e_restricted_partitions(3, 2)) == [(), (1,), (1, 1), (2, 1), (1, 1, 1)]


def test_multipartition_validation():
    mp = Multipartition(((2, 1), (1,)), (0, 1), 3)
    assert mp.r == 2 and mp.total_size() == 4
    with pytest.raises(ValueError):
        Multipartition(((3,),), (0,), 3)  # not 3-restricted
    with pytest.raises(ValueError):
        Multipartition(((1,),), (0, 1), 3)  # length mismatch
    round_trip = Multipartition.from_json_dict(mp.to_json_dict())
    assert round_trip == mp
