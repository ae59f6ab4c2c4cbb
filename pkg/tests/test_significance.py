from fractions import Fraction
from math import comb

import pytest

from linarr.errors import InputError, UndefinedStatistic
from linarr.graphs import LinearArrangement, build_graph, make_special
from linarr.significance import (
    CollectionStats,
    SignedSqrt,
    SignificanceReport,
    cantelli_bound,
    collection_stats,
    mc_central_moment,
    mc_pvalue,
    mean_edge_length,
    unimodal_bound,
    zscore,
)


def three_path():
    return build_graph(3, [(1, 2), (2, 3)])


# ------------------------------------------------------------ SignedSqrt

def test_signed_sqrt_contract():
    s = SignedSqrt(sign=-1, square=Fraction(9, 4))
    assert float(s) == -1.5
    assert float(-s) == 1.5
    assert SignedSqrt(sign=0, square=Fraction(0)).sign == 0
    with pytest.raises(InputError):
        SignedSqrt(sign=0, square=Fraction(1))
    with pytest.raises(InputError):
        SignedSqrt(sign=1, square=Fraction(0))
    with pytest.raises(InputError):
        SignedSqrt(sign=2, square=Fraction(1))
    with pytest.raises(InputError):
        SignedSqrt(sign=1, square=Fraction(-1))


def test_zscore_fixture(fixture_graph):
    z = zscore(fixture_graph, 40)
    assert z.sign == -1
    assert z.square == Fraction(3920, 271)
    assert float(z) == pytest.approx(-3.8032807744691284)


def test_zscore_degenerate():
    g = three_path()
    z = zscore(g, Fraction(8, 3))  # exactly the mean
    assert z.sign == 0 and z.square == 0
    with pytest.raises(UndefinedStatistic):
        zscore(make_special("complete", 4), 10)  # zero variance


# ----------------------------------------------------------- tail bounds

def test_cantelli():
    assert cantelli_bound(SignedSqrt(1, Fraction(3920, 271))) == Fraction(271, 4191)
    assert cantelli_bound(SignedSqrt(1, Fraction(1))) == Fraction(1, 2)
    assert cantelli_bound(SignedSqrt(0, Fraction(0))) == 1
    assert cantelli_bound(SignedSqrt(-1, Fraction(4))) == 1  # vacuous side


def test_unimodal():
    assert unimodal_bound(SignedSqrt(1, Fraction(3920, 271))) == Fraction(271, 17640)
    assert unimodal_bound(SignedSqrt(1, Fraction(4, 9))) == Fraction(1, 2)
    assert unimodal_bound(SignedSqrt(1, Fraction(1))) == Fraction(2, 9)
    assert unimodal_bound(SignedSqrt(1, Fraction(1, 4))) == Fraction(1, 2)
    assert unimodal_bound(SignedSqrt(-1, Fraction(4))) == 1


def test_unimodal_never_looser_than_cantelli():
    for num in range(1, 60):
        c = SignedSqrt(1, Fraction(num, 7))
        assert unimodal_bound(c) <= cantelli_bound(c)


# ------------------------------------------------------------ edge stats

def test_mean_edge_length(fixture_graph):
    arr = LinearArrangement(tuple(range(1, 18)))
    assert mean_edge_length(fixture_graph, arr) == Fraction(5, 2)
    empty = build_graph(3, [])
    with pytest.raises(UndefinedStatistic):
        mean_edge_length(empty, LinearArrangement((1, 2, 3)))


# ------------------------------------------------------------ MC engines

def test_mc_pvalue_three_path():
    g = three_path()
    p = mc_pvalue(g, 2, replicas=20000, seed=11)
    assert abs(p - Fraction(1, 3)) < Fraction(15, 1000)
    assert mc_pvalue(g, 2, replicas=500, seed=3) == mc_pvalue(g, 2, replicas=500, seed=3)


def test_mc_pvalue_extremes():
    k4 = make_special("complete", 4)
    assert mc_pvalue(k4, 10, replicas=100, seed=0) == 1
    assert mc_pvalue(k4, 9, replicas=100, seed=0) == 0
    p = mc_pvalue(k4, 9, replicas=100, seed=0, smooth=True)
    assert p == pytest.approx(1 / 101)


def test_mc_central_moment():
    g = three_path()
    v = mc_central_moment(g, 2, replicas=30000, seed=2)
    assert abs(v - Fraction(2, 9)) < Fraction(1, 100)
    k4 = make_special("complete", 4)
    assert mc_central_moment(k4, 3, replicas=50, seed=0) == 0
    with pytest.raises(InputError):
        mc_central_moment(g, 5, replicas=100)
    with pytest.raises(InputError):
        mc_central_moment(g, 4, replicas=3)


# --------------------------------------------------------------- reports

def test_report_fixture(fixture_graph):
    rep = SignificanceReport.from_observation(fixture_graph, 40)
    assert rep.n == 17 and rep.m == 16
    assert rep.e_d == 96
    assert rep.var_d == Fraction(1084, 5)
    assert rep.z.square == Fraction(3920, 271) and rep.z.sign == -1
    assert rep.c_star.sign == 1
    assert rep.cantelli_bound == Fraction(271, 4191)
    assert rep.unimodal_bound == Fraction(271, 17640)
    assert rep.mc_p is None and rep.mc_replicas is None
    keys = [k for k, _ in rep.rows()]
    assert keys[:4] == ["n", "m", "d_observed", "mean_length"]
    assert dict(rep.rows())["mean_length"] == Fraction(5, 2)


def test_report_with_mc(fixture_graph):
    p = mc_pvalue(fixture_graph, 40, replicas=400, seed=5)
    rep = SignificanceReport.from_observation(
        fixture_graph, 40, mc_p=p, mc_replicas=400)
    assert rep.mc_replicas == 400
    assert 0 <= rep.mc_p <= 0.05  # far left tail, tiny p
    assert any(k == "mc_p" for k, _ in rep.rows())


# ------------------------------------------------------------ collections

def test_collection_single(fixture_graph):
    stats = collection_stats([(fixture_graph, 40)])
    assert stats.count == 1
    assert stats.total_vertices == 17 and stats.total_edges == 16
    assert stats.mean_d == Fraction(5, 2)
    assert stats.mean_z == pytest.approx(-3.8032807744691284 / 16)
    assert stats.z_norm == "edges"
    assert stats.skipped_zero_variance == 0


def test_collection_norms(fixture_graph):
    by_net = collection_stats([(fixture_graph, 40)], z_norm="networks")
    assert by_net.mean_z == pytest.approx(-3.8032807744691284)
    two = collection_stats([(fixture_graph, 40), (fixture_graph, 40)])
    assert two.mean_z == pytest.approx(-3.8032807744691284 / 16)
    assert two.mean_d == Fraction(5, 2)
    with pytest.raises(InputError):
        collection_stats([(fixture_graph, 40)], z_norm="edges2")


def test_collection_degenerate_members(fixture_graph):
    pair = build_graph(2, [(1, 2)])  # D is constant, variance 0
    with pytest.raises(UndefinedStatistic):
        collection_stats([(fixture_graph, 40), (pair, 1)])
    stats = collection_stats(
        [(fixture_graph, 40), (pair, 1)], skip_degenerate=True)
    assert stats.count == 2  # both parsed; one excluded from z only
    assert stats.skipped_zero_variance == 1
    assert stats.mean_z == pytest.approx(-3.8032807744691284 / 16)
    assert stats.total_vertices == 19 and stats.total_edges == 17
    assert stats.mean_d == Fraction(41, 17)  # D totals still include everyone


def test_collection_empty():
    with pytest.raises(InputError):
        collection_stats([])


def test_collection_tree_identity():
    # for a batch of trees, the edge total is vertex total minus batch size
    trees = [make_special("linear_tree", n) for n in (3, 5, 8)]
    stats = collection_stats([(t, sum(range(1, t.n))) for t in trees],
                             z_norm="networks")
    assert stats.total_edges == stats.total_vertices - stats.count
