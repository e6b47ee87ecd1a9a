import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitting_loci.core_partition import (
    EMPTY,
    Partition,
    c_vector,
    corners,
    diagonal,
    downward_displacement,
    inside_corner_residues,
    is_k_core,
    k_cores_by_reachability,
    partitions_of,
    partitions_up_to,
    rho_k,
    satisfies_k_descent,
    transpose,
    upward_displacement,
)
from splitting_loci.errors import DomainError


def hook_free_of(p, k):
    # independent core test: no hook length divisible by k
    heights = p.column_heights()
    for x, y in p:
        hook = (p.rows[y - 1] - x) + (heights[x - 1] - y) + 1
        if hook % k == 0:
            return False
    return True


partitions = st.lists(st.integers(1, 7), max_size=7).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True)))
)


def test_partition_validation():
    with pytest.raises(DomainError):
        Partition((1, 2))
    with pytest.raises(DomainError):
        Partition((2, 0))
    assert Partition((3, 1)).size == 4
    assert EMPTY.size == 0 and EMPTY.width == 0


def test_from_boxes_round_trip():
    p = Partition((4, 2, 1, 1))
    assert Partition.from_boxes(p) == p
    with pytest.raises(DomainError):
        Partition.from_boxes({(1, 1), (3, 1)})


def test_diagonal_normalized():
    assert diagonal((4, 1), 3) == 0
    assert diagonal((1, 4), 3) == 0
    assert diagonal((2, 1), 3) == 2


def test_corners_small():
    inside, outside = corners(Partition((2, 1)))
    assert inside == {(2, 1), (1, 2)}
    assert outside == {(3, 1), (2, 2), (1, 3)}
    inside, outside = corners(EMPTY)
    assert inside == set() and outside == {(1, 1)}


def test_displacement_examples():
    # from the empty partition class 0 adds the single box
    assert upward_displacement(EMPTY, 0, 3) == Partition((1,))
    assert upward_displacement(EMPTY, 1, 3) == EMPTY
    # [2,1] with k=3: class 1 holds (1,2), class 2 holds (2,1)
    assert upward_displacement(Partition((1,)), 1, 3) == Partition((1, 1))
    # all three inside corners of [4,2,1,1] lie in class 0
    assert downward_displacement(Partition((4, 2, 1, 1)), 0, 3) == Partition((3, 1, 1))


def test_c_vector_of_trigonal_staircase():
    lam = Partition((4, 2, 1, 1))
    assert c_vector(lam, 3) == (4, 1, 0)
    assert rho_k(lam, 3) == 5
    assert is_k_core(lam, 3)


def test_c_vector_321_mod_4():
    # columns of [3,2,1] end at (1,3), (2,2), (3,1): classes 2, 0, 2
    assert c_vector(Partition((3, 2, 1)), 4) == (2, 0, 3, 0)
    assert rho_k(Partition((3, 2, 1)), 4) == 5


def test_non_core():
    assert not is_k_core(Partition((2,)), 2)
    assert not is_k_core(Partition((3,)), 3)
    assert is_k_core(Partition((2, 1)), 2)


def test_modulus_checked():
    with pytest.raises(DomainError):
        c_vector(Partition((1,)), 1)


def test_partitions_of_counts():
    # p(n) for n = 0..8
    assert [sum(1 for _ in partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


@pytest.mark.parametrize("k", range(2, 7))
def test_core_characterizations_agree(k):
    cores = k_cores_by_reachability(k, 12)
    for p in partitions_up_to(12):
        assert is_k_core(p, k) == (p in cores) == hook_free_of(p, k), p


@given(partitions, st.integers(2, 6))
def test_transpose_involution(p, k):
    assert transpose(transpose(p)) == p
    assert is_k_core(transpose(p), k) == is_k_core(p, k)


@given(partitions, st.integers(2, 6), st.integers(0, 5))
def test_displacement_stays_in_diagonal_class(p, k, a):
    q = upward_displacement(p, a, k)
    assert p.issubset(q)
    assert all(diagonal(b, k) == a % k for b in set(q) - set(p))
    r = downward_displacement(p, a, k)
    assert r.issubset(p)
    assert all(diagonal(b, k) == a % k for b in set(p) - set(r))


@settings(max_examples=60)
@given(partitions, st.integers(2, 6))
def test_cores_displace_to_cores(p, k):
    if not is_k_core(p, k):
        return
    for a in range(k):
        assert satisfies_k_descent(upward_displacement(p, a, k), k)
        assert is_k_core(downward_displacement(p, a, k), k)


def test_inside_corner_residues():
    assert inside_corner_residues(Partition((4, 2, 1, 1)), 3) == {0}
