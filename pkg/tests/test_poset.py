import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from splitting_loci.core_partition import (
    EMPTY,
    Partition,
    c_vector,
    downward_displacement,
    inside_corner_residues,
    is_k_core,
    k_cores_by_reachability,
    rho_k,
    transpose,
    upward_displacement,
)
from splitting_loci.errors import DomainError, GuardExceeded, NoInsideCorner
from splitting_loci.poset import (
    build_hasse,
    canonical_rotation,
    core_from_cvector,
    count_maximal_chains,
    cover_moves,
    cvec_downward,
    enumerate_maximal_chains,
    hasse_from_json,
)
from splitting_loci.splitting import c_vector_of_mu

QUADRIC = (0, 0, 0, 5, 5, 2)


def chains_by_partitions(lam, k):
    # oracle: count chains on partitions directly, no C-vectors involved
    if lam.size == 0:
        return 1
    return sum(chains_by_partitions(downward_displacement(lam, a, k), k) for a in inside_corner_residues(lam, k))


def test_cvec_downward_examples():
    assert cvec_downward((4, 1, 0), 0) == (0, 1, 3)
    assert c_vector(Partition((3, 1, 1)), 3) == (0, 1, 3)
    assert cvec_downward((1, 0, 0, 0), 0) == (0, 0, 0, 0)
    assert cvec_downward((3, 3, 0, 0), 0) == (0, 3, 0, 2)
    with pytest.raises(NoInsideCorner):
        cvec_downward((4, 1, 0), 1)


def test_cover_moves_examples():
    assert cover_moves((4, 1, 0)) == [0]
    assert cover_moves((0, 0, 0)) == []
    assert cover_moves((0, 2, 0, 0, 0, 0)) == [1]


def test_canonical_rotation_examples():
    assert canonical_rotation((0, 0, 4, 1)) == (0, 0, 4, 1)
    assert canonical_rotation((1, 0, 0, 4)) == (0, 0, 4, 1)
    assert canonical_rotation((3, 3, 3)) == (3, 3, 3)
    assert canonical_rotation((5, 2, 0, 0, 0)) == (0, 0, 0, 5, 2)


def test_count_examples():
    assert count_maximal_chains((4, 1, 0)) == 2
    assert count_maximal_chains((5, 2, 0, 0, 0)) == 8
    assert count_maximal_chains(QUADRIC) == 342
    assert all(count_maximal_chains((z, 0, 0, 0)) == 1 for z in range(1, 9))
    assert count_maximal_chains((0, 0, 0, 0, 0)) == 1


def test_invalid_vectors():
    with pytest.raises(DomainError):
        count_maximal_chains((1,))
    with pytest.raises(DomainError):
        count_maximal_chains((1, -1, 0))


def test_enumeration_examples():
    chains = list(enumerate_maximal_chains((4, 1, 0)))
    assert sorted(c.residues for c in chains) == [(0, 1, 2, 1, 0), (0, 2, 1, 2, 0)]
    assert [c.residues for c in enumerate_maximal_chains((0, 0, 0))] == [()]
    assert sum(1 for _ in enumerate_maximal_chains(QUADRIC)) == 342
    with pytest.raises(GuardExceeded):
        list(enumerate_maximal_chains(QUADRIC, max_chains=100))


def test_hasse_examples():
    d = build_hasse((4, 1, 0))
    assert len(d.nodes) == 8
    assert len(build_hasse((0, 0, 0)).nodes) == 1
    with pytest.raises(GuardExceeded):
        build_hasse(QUADRIC, max_nodes=10)


def test_hasse_json_round_trip():
    d = build_hasse(QUADRIC)
    back = hasse_from_json(d.to_json())
    assert back.nodes == d.nodes and back.edges == d.edges
    assert back.to_json() == d.to_json()
    dot = d.to_dot()
    assert dot.startswith("digraph") and dot.count("->") == len(d.edges)


def test_hasse_edges_are_legal_moves():
    d = build_hasse(QUADRIC)
    assert {(c, p, a) for c, p, a in d.edges} == {
        (cvec_downward(p, a), p, a) for p in d.nodes for a in cover_moves(p)
    }
    counts = d.chain_counts()
    assert all(counts[v] == count_maximal_chains(v) for v in d.nodes)


def test_memo_is_thread_safe():
    results = []

    def work(c):
        results.append(count_maximal_chains(c))

    threads = [threading.Thread(target=work, args=((0, 0, 0, 0, 6, 6, 3),)) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1


def test_core_from_cvector():
    assert core_from_cvector((4, 1, 0)) == Partition((4, 2, 1, 1))
    assert core_from_cvector((0, 0, 0)) == EMPTY
    with pytest.raises(DomainError):
        core_from_cvector((1, 1, 0, 0))


def all_cores(max_size=12):
    for k in range(2, 7):
        for lam in sorted(k_cores_by_reachability(k, max_size)):
            yield k, lam


@pytest.mark.parametrize("k,lam", list(all_cores(9)), ids=str)
def test_recurrence_matches_partition_oracle(k, lam):
    c = c_vector(lam, k)
    n = count_maximal_chains(c)
    assert n == chains_by_partitions(lam, k)
    assert n == sum(1 for _ in enumerate_maximal_chains(c))


@given(st.lists(st.integers(0, 6), min_size=2, max_size=6), st.integers(0, 5))
def test_rotation_invariance(c, s):
    c = tuple(c)
    s %= len(c)
    assert count_maximal_chains(c[s:] + c[:s]) == count_maximal_chains(c)


@given(st.lists(st.integers(-4, 1), min_size=2, max_size=5))
def test_staircase_vectors_are_core_vectors(mu):
    from splitting_loci.splitting import lambda_of_mu

    c = c_vector_of_mu(mu)
    assert core_from_cvector(c) == lambda_of_mu(mu)
