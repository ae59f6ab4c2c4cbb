from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from linarr.errors import InputError, UndefinedStatistic
from linarr.graphs import (
    LinearArrangement,
    build_graph,
    degree_spectrum,
    independent_pairs,
    length_spectrum,
    make_special,
    prufer_decode,
    second_moment_degree,
    sum_edge_lengths,
    sum_squared_degrees,
)


def test_build_graph_basic():
    g = build_graph(3, [(1, 2), (3, 2)])
    assert g.n == 3
    assert g.m == 2
    assert (2, 3) in g.edges  # stored with u < v


def test_build_graph_rejects_self_loop():
    with pytest.raises(InputError, match="2"):
        build_graph(3, [(2, 2)])


def test_build_graph_rejects_duplicate():
    with pytest.raises(InputError):
        build_graph(3, [(1, 2), (2, 1)])


def test_build_graph_rejects_out_of_range():
    with pytest.raises(InputError, match="4"):
        build_graph(3, [(1, 4)])
    with pytest.raises(InputError):
        build_graph(3, [(0, 1)])


def test_arrangement_validates_permutation():
    LinearArrangement(position=(2, 1, 3))
    with pytest.raises(InputError):
        LinearArrangement(position=(1, 1, 3))
    with pytest.raises(InputError):
        LinearArrangement(position=(0, 1, 2))


def test_arrangement_identity_and_lookup():
    arr = LinearArrangement.identity(4)
    assert arr.position == (1, 2, 3, 4)
    assert arr.of(3) == 3
    arr2 = LinearArrangement(position=(3, 1, 2))
    assert arr2.of(1) == 3


def test_fixture_identity_d(fixture_graph):
    arr = LinearArrangement.identity(17)
    assert sum_edge_lengths(fixture_graph, arr) == 40


def test_fixture_length_spectrum(fixture_graph):
    arr = LinearArrangement.identity(17)
    assert length_spectrum(fixture_graph, arr) == {1: 8, 2: 3, 3: 1, 4: 2, 6: 1, 9: 1}


def test_fixture_degree_spectrum(fixture_graph):
    assert degree_spectrum(fixture_graph) == {5: 2, 3: 1, 2: 5, 1: 9}
    assert sum_squared_degrees(fixture_graph) == 88


def test_second_moment_degree(fixture_graph):
    k2, sk2 = second_moment_degree(fixture_graph)
    assert k2 == Fraction(88, 17)
    assert sk2 == 88
    with pytest.raises(UndefinedStatistic):
        second_moment_degree(build_graph(0, []))


def test_independent_pairs_fixture(fixture_graph):
    q1, q2, q = independent_pairs(fixture_graph)
    assert (q1, q2, q) == (120, 28, 92)


def test_independent_pairs_complete():
    g = make_special("complete", 5)
    q1, q2, q = independent_pairs(g)
    # every pair of disjoint edges: 3 per 4-subset
    assert q == 3 * 5


def test_make_special_shapes():
    path = make_special("linear_tree", 4)
    assert sorted(path.edges) == [(1, 2), (2, 3), (3, 4)]
    star = make_special("star_tree", 4)
    assert sorted(star.edges) == [(1, 2), (1, 3), (1, 4)]
    assert make_special("complete", 5).m == 10
    assert make_special("single_edge", 6).edges == frozenset({(1, 2)})
    assert make_special("empty", 3).m == 0
    with pytest.raises(InputError):
        make_special("wheel", 4)


def test_prufer_decode_known_code():
    # code (1, 1) on n=4 is the star at vertex 1
    assert set(prufer_decode((1, 1), 4)) == {(1, 2), (1, 3), (1, 4)}


def test_prufer_decode_bijection_n5():
    from itertools import product

    seen = set()
    for code in product(range(1, 6), repeat=3):
        seen.add(frozenset(prufer_decode(code, 5)))
    assert len(seen) == 125


def test_prufer_degree_property():
    code = (3, 3, 1, 5)
    edges = prufer_decode(code, 6)
    deg = {v: 0 for v in range(1, 7)}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for v in range(1, 7):
        assert deg[v] == code.count(v) + 1


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    take = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return build_graph(n, take)


@given(small_graphs())
def test_degree_sum_is_twice_edges(g):
    assert sum(g.degrees()) == 2 * g.m


@given(small_graphs())
def test_pair_counts_identity(g):
    q1, q2, q = independent_pairs(g)
    assert q1 == g.m * (g.m - 1) // 2
    assert 2 * q2 == sum_squared_degrees(g) - 2 * g.m
    assert q == q1 - q2


@given(small_graphs(), st.randoms())
def test_spectrum_mass_and_total(g, rnd):
    order = list(range(1, g.n + 1))
    rnd.shuffle(order)
    arr = LinearArrangement(position=tuple(order))
    spec = length_spectrum(g, arr)
    assert sum(spec.values()) == g.m
    assert sum(d * c for d, c in spec.items()) == sum_edge_lengths(g, arr)
