from fractions import Fraction
from itertools import permutations

import pytest

from linarr.errors import CapExceeded, InputError
from linarr.graphs import LinearArrangement, build_graph, make_special, sum_edge_lengths
from linarr.moments import e_phi, second_moment_d, variance_d
from linarr.oracle import (
    distribution_sanity,
    enumerate_distribution,
    enumerate_e_phi,
    enumerate_gnm,
    enumerate_labelled_trees,
    solve_e01_system,
    star_d_tau,
)


def brute_counts(g):
    """Independent reference: walk permutations with stdlib only."""
    counts = {}
    for perm in permutations(range(1, g.n + 1)):
        arr = LinearArrangement(position=perm)
        d = sum_edge_lengths(g, arr)
        counts[d] = counts.get(d, 0) + 1
    return counts


def test_three_path_distribution():
    g = make_special("linear_tree", 3)
    dist = enumerate_distribution(g)
    assert dict(dist.counts) == {2: 2, 3: 4}
    assert dist.e_d == Fraction(8, 3)
    assert dist.e_d2 == Fraction(22, 3)
    assert dist.var_d == Fraction(2, 9)
    assert dist.w_d == Fraction(-2, 27)
    assert (dist.d_min, dist.d_max) == (2, 3)
    assert dist.cdf(2) == Fraction(1, 3)
    assert dist.cdf(1) == 0
    assert dist.cdf(3) == 1


def test_complete_graph_is_constant():
    g = make_special("complete", 4)
    dist = enumerate_distribution(g)
    assert dict(dist.counts) == {10: 24}
    assert dist.var_d == 0


def test_empty_and_tiny():
    assert dict(enumerate_distribution(build_graph(0, [])).counts) == {0: 1}
    assert dict(enumerate_distribution(build_graph(1, [])).counts) == {0: 1}
    d2 = enumerate_distribution(build_graph(2, [(1, 2)]))
    assert dict(d2.counts) == {1: 2}


def test_matches_stdlib_permutation_walk():
    for g in (build_graph(4, [(1, 2), (2, 3), (3, 4)]),
              build_graph(5, [(1, 3), (2, 5), (3, 4), (1, 5)]),
              make_special("star_tree", 5)):
        dist = enumerate_distribution(g)
        assert dict(dist.counts) == brute_counts(g)


def test_cap_enforced():
    with pytest.raises(CapExceeded):
        enumerate_distribution(make_special("empty", 11))
    # explicit cap raise is honored
    dist = enumerate_distribution(make_special("single_edge", 9), cap=9)
    n = 9
    from math import factorial

    expected = {d: 2 * (n - d) * factorial(n - 2) for d in range(1, n)}
    assert dict(dist.counts) == expected


def test_distribution_sanity_helper(fixture_graph):
    g = build_graph(6, [(1, 2), (2, 3), (4, 6)])
    assert distribution_sanity(g, enumerate_distribution(g))


def test_enumerate_e_phi_matches_closed_forms_small():
    assert enumerate_e_phi(5, 2) == 5
    assert enumerate_e_phi(5, 1) == Fraction(39, 10)
    assert enumerate_e_phi(5, 0) == Fraction(58, 15)
    with pytest.raises(InputError):
        enumerate_e_phi(3, 0)


def test_star_d_tau():
    assert star_d_tau(5, 1) == 10  # hub at the end: 1+2+3+4
    assert star_d_tau(5, 3) == 6
    for n in range(2, 9):
        for tau in range(1, n + 1):
            assert star_d_tau(n, tau) == star_d_tau(n, n + 1 - tau)


def test_star_d_tau_enumeration_agrees():
    # position sums over the hub equal a direct permutation average
    n = 5
    g = make_special("star_tree", n)
    dist = enumerate_distribution(g)
    from math import factorial

    total = sum(star_d_tau(n, tau) ** 2 for tau in range(1, n + 1))
    assert Fraction(total, n) == dist.e_d2


def test_solve_e01_system():
    assert solve_e01_system(5) == (Fraction(58, 15), Fraction(39, 10))
    for n in range(4, 9):
        e0, e1 = solve_e01_system(n)
        assert e0 == e_phi(n, 0)
        assert e1 == e_phi(n, 1)
    with pytest.raises(InputError):
        solve_e01_system(3)


def test_enumerate_labelled_trees_counts():
    assert len({t.edges for t in enumerate_labelled_trees(4)}) == 16
    assert len({t.edges for t in enumerate_labelled_trees(5)}) == 125
    for t in enumerate_labelled_trees(5):
        assert t.m == 4
    assert [t.m for t in enumerate_labelled_trees(1)] == [0]
    assert [sorted(t.edges) for t in enumerate_labelled_trees(2)] == [[(1, 2)]]
    with pytest.raises(CapExceeded):
        next(enumerate_labelled_trees(9))


def test_enumerate_gnm_counts():
    from math import comb

    graphs = list(enumerate_gnm(4, 3))
    assert len(graphs) == comb(6, 3)
    assert len({g.edges for g in graphs}) == comb(6, 3)
    with pytest.raises(CapExceeded):
        next(enumerate_gnm(10, 20, cap=10))
    with pytest.raises(InputError):
        next(enumerate_gnm(3, 9))


def test_moments_match_closed_forms_sample():
    for g in (build_graph(6, [(1, 4), (2, 3), (2, 6), (5, 6), (1, 2)]),
              make_special("linear_tree", 7)):
        dist = enumerate_distribution(g)
        assert dist.e_d2 == second_moment_d(g)
        assert dist.var_d == variance_d(g)
