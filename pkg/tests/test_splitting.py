import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from splitting_loci.core_partition import Partition, c_vector, is_k_core, rho_k, transpose
from splitting_loci.errors import ComparisonUndefined, DomainError, EmptyStaircase
from splitting_loci.splitting import (
    SplittingType,
    c_vector_of_mu,
    corner_diagonal,
    degree,
    dominance_leq,
    h_invariants,
    lambda_of_mu,
    m_window,
    magnitude,
    mu_minus,
    mu_plus,
    rank_jumps,
    serre_dual,
    strict_rank_jumps,
)

TRIG = SplittingType((-3, -1, 1))

mus = st.integers(2, 5).flatmap(
    lambda k: st.lists(st.integers(-5, 2), min_size=k, max_size=k)
).map(SplittingType)


def staircase_by_boxes(mu):
    # oracle: box (x, y) is in lambda(mu) iff some twist m has x <= x_m and y <= y_m
    lo, hi = -10 - max(abs(v) for v in mu), 10 + max(abs(v) for v in mu)
    boxes = set()
    for m in range(lo, hi):
        w, h = h_invariants(mu, m)
        boxes |= {(x, y) for x in range(1, w + 1) for y in range(1, h + 1)}
    return Partition.from_boxes(boxes) if boxes else Partition(())


def test_parse_and_sort():
    assert SplittingType.parse("1,-3,-1") == TRIG
    assert str(TRIG) == "-3,-1,1"
    for bad in ("", "1", "1,,2", "a,b"):
        with pytest.raises(DomainError):
            SplittingType.parse(bad)


def test_immutable():
    with pytest.raises(AttributeError):
        TRIG.mu = (0, 0)


def test_trigonal_invariants():
    assert lambda_of_mu(TRIG) == Partition((4, 2, 1, 1))
    assert magnitude(TRIG) == 5
    assert c_vector_of_mu(TRIG) == (4, 1, 0)
    assert degree(TRIG, 5) == 4 + 0
    assert list(m_window(TRIG)) == [-2, -1, 0, 1, 2]


def test_degree_rejects_negative_genus():
    with pytest.raises(DomainError):
        degree(TRIG, -1)


def test_balanced_types_have_empty_staircase():
    for mu in [(0, 0, 0), (0, 1), (-1, 0, 0, 0), (2, 2, 3, 3)]:
        assert lambda_of_mu(mu).size == 0
        assert magnitude(mu) == 0


def test_rank_jumps_trigonal():
    jumps = rank_jumps(TRIG)
    assert [(j.m, j.alpha) for j in jumps] == [(-2, 0), (-1, 1), (0, 1), (1, 2), (2, 2)]
    assert strict_rank_jumps(TRIG) == [1, 2]


def test_mu_plus_minus_trigonal():
    assert mu_plus(TRIG) == SplittingType((-2, -1, 1))
    assert mu_minus(TRIG) == SplittingType((-3, -1, 0))
    with pytest.raises(EmptyStaircase):
        mu_plus((0, 0, 0))
    with pytest.raises(EmptyStaircase):
        mu_minus((0, 0, 0))


def test_dominance():
    assert dominance_leq((-2, 0, 2), (-1, 0, 1))
    assert not dominance_leq((-1, 0, 1), (-2, 0, 2))
    with pytest.raises(ComparisonUndefined):
        dominance_leq((0, 0), (0, 1))
    with pytest.raises(ComparisonUndefined):
        dominance_leq((0, 0), (0, 0, 0))


def test_corner_diagonal():
    assert corner_diagonal(TRIG) == 0
    assert corner_diagonal((-3, -3, -2, -1, 0, 0)) == 3


def test_quadric_type():
    mu = SplittingType((-3, -3, -2, -1, 0, 0))
    assert lambda_of_mu(mu) == Partition((5, 5, 2, 2, 2))
    assert c_vector_of_mu(mu) == (0, 0, 0, 5, 5, 2)


@given(mus)
def test_staircase_matches_box_oracle(mu):
    assert lambda_of_mu(mu) == staircase_by_boxes(mu)


@given(mus)
def test_staircase_is_core_with_rank_magnitude(mu):
    lam = lambda_of_mu(mu)
    assert is_k_core(lam, mu.k)
    assert rho_k(lam, mu.k) == magnitude(mu)
    assert c_vector(lam, mu.k) == c_vector_of_mu(mu)


@given(mus, st.integers(-4, 4))
def test_twist_invariance(mu, m):
    assert lambda_of_mu(mu.shifted(m)) == lambda_of_mu(mu)
    assert magnitude(mu.shifted(m)) == magnitude(mu)


@given(mus)
def test_serre_dual_transposes(mu):
    assert lambda_of_mu(serre_dual(mu)) == transpose(lambda_of_mu(mu))
    assert serre_dual(serre_dual(mu)) == mu


@given(mus)
def test_row_and_column_deletion(mu):
    lam = lambda_of_mu(mu)
    if lam.size == 0:
        return
    plus, minus = lambda_of_mu(mu_plus(mu)), lambda_of_mu(mu_minus(mu))
    assert plus == Partition(lam.rows[1:])
    assert minus == Partition(tuple(r - 1 for r in lam.rows if r > 1))
    alpha = {j.m: j.alpha for j in rank_jumps(mu)}
    drop_row = magnitude(mu) - magnitude(mu_plus(mu))
    drop_col = magnitude(mu) - magnitude(mu_minus(mu))
    assert drop_row == alpha[-2 - mu[0]]
    assert drop_col == mu.k - alpha[1 - mu[-1]]
    strict = strict_rank_jumps(mu)
    # span 2 staircases are nonempty yet have no strict jump
    if strict:
        assert drop_row == max(strict)
        assert drop_col == mu.k - min(strict)
    else:
        assert mu[-1] - mu[0] == 2


def test_magnitude_small_grid_by_definition():
    for k in (2, 3, 4):
        for v in itertools.combinations_with_replacement(range(-3, 1), k):
            direct = sum(max(0, b - a - 1) for a, b in itertools.combinations(v, 2))
            assert magnitude(v) == direct
