import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import pytest

from linarr import oracle
from linarr.bounds import minla_lower, upper_em
from linarr.graphs import build_graph, sum_squared_degrees
from linarr.moments import expected_d, second_moment_from_counts

FIXTURE_EDGES = [
    (1, 2), (1, 4), (1, 5), (1, 7), (1, 10), (2, 3), (2, 6), (8, 10),
    (9, 10), (10, 11), (10, 12), (11, 13), (13, 14), (14, 15), (15, 16),
    (16, 17),
]


@pytest.fixture
def fixture_graph():
    """17-vertex tree with degree multiset {5,5,3,2^5,1^9}; identity D = 40."""
    return build_graph(17, FIXTURE_EDGES)


@dataclass
class SweepOutcome:
    graphs: int = 0
    trees: int = 0
    moment_mismatches: list = field(default_factory=list)
    bound_violations: list = field(default_factory=list)
    seconds: float = 0.0


def _check_one(g, memo, out: SweepOutcome):
    n, m = g.n, g.m
    sk2 = sum_squared_degrees(g)
    dist = oracle.enumerate_distribution(g)
    fact = dist.total
    s1 = s2 = 0
    for d, c in dist.counts:
        s1 += d * c
        s2 += d * d * c
    key = (n, m, sk2)
    closed = memo.get(key)
    if closed is None:
        e = expected_d(n, m)
        e2 = second_moment_from_counts(n, m, sk2)
        closed = (e, e2, e2 - e * e)
        memo[key] = closed
    e, e2, v = closed
    mean = Fraction(s1, fact)
    second = Fraction(s2, fact)
    if mean != e or second != e2 or second - mean * mean != v:
        out.moment_mismatches.append((n, sorted(g.edges)))
    # 4*dm = 2m(2n-1) - sum k^2 keeps the quarter-integer bound in integers
    if 4 * dist.d_max > 2 * m * (2 * n - 1) - sk2 \
            or dist.d_max > upper_em(n, m) \
            or dist.d_min < minla_lower(n, m):
        out.bound_violations.append((n, sorted(g.edges)))


@pytest.fixture(scope="session")
def oracle_sweep():
    """Every simple graph on n <= 6 and every labelled tree on n <= 8,
    each compared against full arrangement enumeration. Shared by the
    oracle-equivalence and bounds acceptance checks; takes about a minute."""
    out = SweepOutcome()
    memo: dict = {}
    t0 = time.perf_counter()
    for n in range(0, 7):
        for m in range(comb(n, 2) + 1):
            for g in oracle.enumerate_gnm(n, m):
                _check_one(g, memo, out)
                out.graphs += 1
    for n in range(1, 9):
        for g in oracle.enumerate_labelled_trees(n):
            _check_one(g, memo, out)
            out.trees += 1
    out.seconds = time.perf_counter() - t0
    return out
