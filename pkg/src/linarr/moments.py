"""Exact first and second moments of D under uniformly random arrangements.

All closed forms evaluate in exact rational arithmetic; floats appear only in
Monte Carlo code and at display time. The second moment decomposes over
ordered edge pairs classified by how many vertices they share (phi = 0, 1, 2):

    E[D^2] = f0*E0 + f1*E1 + f2*E2

where f_phi counts the pairs and E_phi is the expected product of the two
lengths. Substituting the closed E_phi forms gives E[D^2] and V[D] as
functions of (n, m, sum k^2) alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InputError, UndefinedStatistic
from .graphs import Graph, independent_pairs, sum_squared_degrees

Exact = Fraction


def expected_d(n: int, m: int) -> Fraction:
    """E[D] = (n+1)m/3; every edge has expected length (n+1)/3."""
    if m < 0 or m > comb(n, 2):
        raise InputError(f"m={m} impossible on {n} vertices")
    return Fraction((n + 1) * m, 3)


def e_phi(n: int, phi: int) -> Fraction:
    """Expected product of the lengths of two edges sharing phi vertices.

    Validity needs all 4 - phi endpoint vertices to fit: n >= 4 - phi.
      E2 = n(n+1)/6          (the expected squared length of one edge)
      E1 = (n+1)(7n+4)/60
      E0 = (n+1)(5n+4)/45
    """
    if phi not in (0, 1, 2):
        raise InputError(f"phi must be 0, 1 or 2, got {phi}")
    if n < 4 - phi:
        raise InputError(f"e_phi undefined for n={n} < {4 - phi}")
    if phi == 2:
        return Fraction(n * (n + 1), 6)
    if phi == 1:
        return Fraction((n + 1) * (7 * n + 4), 60)
    return Fraction((n + 1) * (5 * n + 4), 45)


def f_counts(g: Graph) -> tuple[int, int, int]:
    """(f0, f1, f2): ordered edge pairs sharing 0, 1, 2 vertices.

    f2 = m (a pair with itself), f0 = 2q, f1 is the rest; they sum to m^2.
    """
    m = g.m
    _, _, q = independent_pairs(g)
    f0 = 2 * q
    f1 = m * (m - 1) - f0
    return f0, f1, m


def second_moment_from_counts(n: int, m: int, sum_k2) -> Fraction:
    """E[D^2] as a function of n, m and sum k^2 (exact or expected).

    The degree term enters as (n - 4) * sum_k2 / 4, which keeps the formula
    defined at n = 0 where <k^2> itself is not.
    """
    return Fraction(n + 1, 45) * (
        m * (m * (5 * n + 4) + 2 * (n - 1)) + Fraction((n - 4) * sum_k2, 4)
    )


def variance_from_counts(n: int, m: int, sum_k2) -> Fraction:
    """V[D] = (n+1)/45 * [m(2(n-1) - m) + (n-4)*sum_k2/4]."""
    return Fraction(n + 1, 45) * (
        m * (2 * (n - 1) - m) + Fraction((n - 4) * sum_k2, 4)
    )


def second_moment_d(g: Graph) -> Fraction:
    return second_moment_from_counts(g.n, g.m, sum_squared_degrees(g))


def variance_d(g: Graph) -> Fraction:
    return variance_from_counts(g.n, g.m, sum_squared_degrees(g))


def _check_tree_k2(n: int, sum_k2: int):
    # any tree sits between the path (sum k^2 = 4n - 6) and the star (n(n-1));
    # sweeps deliberately admit every integer in that window, so parity and
    # realizability by an actual degree sequence are not enforced
    if n <= 1:
        if sum_k2 != 0:
            raise InputError(f"a tree on n={n} vertices has sum k^2 = 0")
        return
    lo, hi = 4 * n - 6, n * (n - 1)
    if not (lo <= sum_k2 <= hi):
        raise InputError(f"sum k^2 = {sum_k2} outside the tree range [{lo}, {hi}] for n={n}")


def tree_moments(n: int, sum_k2: int) -> tuple[Fraction, Fraction]:
    """(E[D^2], V[D]) for a tree, where m = n - 1."""
    _check_tree_k2(n, sum_k2)
    m = max(n - 1, 0)
    return (
        second_moment_from_counts(n, m, sum_k2),
        variance_from_counts(n, m, sum_k2),
    )


# validity (smallest n) of each closed-form row below
_SPECIAL_VALIDITY = {
    "empty": 0,
    "single_edge": 2,
    "linear_tree": 2,
    "star_tree": 1,
    "complete": 0,
}


def special_table(kind: str, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """(E[D], E[D^2], V[D]) closed forms for the five named families."""
    if kind not in _SPECIAL_VALIDITY:
        raise InputError(f"unknown special graph kind {kind!r}")
    if n < _SPECIAL_VALIDITY[kind]:
        raise InputError(f"{kind} row needs n >= {_SPECIAL_VALIDITY[kind]}, got {n}")
    if kind == "empty":
        return Fraction(0), Fraction(0), Fraction(0)
    if kind == "single_edge":
        return (
            Fraction(n + 1, 3),
            Fraction(n * (n + 1), 6),
            Fraction((n + 1) * (n - 2), 18),
        )
    if kind == "linear_tree":
        return (
            Fraction(n * n - 1, 3),
            Fraction((n + 1) * (10 * n**3 - 6 * n**2 - 25 * n + 24), 90),
            Fraction((n + 1) * (n - 2) * (4 * n - 7), 90),
        )
    if kind == "star_tree":
        return (
            Fraction(n * n - 1, 3),
            Fraction((n * n - 1) * (7 * n * n - 8), 60),
            Fraction((n * n - 1) * (n * n - 4), 180),
        )
    dk = Fraction(n * (n * n - 1), 6)  # complete: D is constant
    return dk, dk * dk, Fraction(0)


def hubiness(n: int, sum_k2: int) -> Fraction:
    """Affine rescaling of <k^2> mapping the path to 0 and the star to 1.

    h = (<k^2> - <k^2>(path)) / (<k^2>(star) - <k^2>(path)), with
    <k^2>(path) = 4 - 6/n and <k^2>(star) = n - 1. The anchors differ only
    from n = 4 on; at n = 3 the single tree is both path and star and the
    rescaling is 0/0.
    """
    if n < 3:
        raise InputError(f"hubiness needs n >= 3, got {n}")
    if n == 3:
        raise UndefinedStatistic(
            "path and star coincide at n=3; hubiness is 0/0"
        )
    _check_tree_k2(n, sum_k2)
    k2 = Fraction(sum_k2, n)
    lin = 4 - Fraction(6, n)
    star = Fraction(n - 1)
    return (k2 - lin) / (star - lin)


@dataclass(frozen=True)
class MomentsReport:
    n: int
    m: int
    sum_k2: int
    q: int
    f0: int
    f1: int
    f2: int
    e_d: Fraction
    e_d2: Fraction
    var_d: Fraction

    @staticmethod
    def from_graph(g: Graph) -> "MomentsReport":
        f0, f1, f2 = f_counts(g)
        e1 = expected_d(g.n, g.m)
        e2 = second_moment_d(g)
        return MomentsReport(
            n=g.n,
            m=g.m,
            sum_k2=sum_squared_degrees(g),
            q=f0 // 2,
            f0=f0,
            f1=f1,
            f2=f2,
            e_d=e1,
            e_d2=e2,
            var_d=e2 - e1 * e1,
        )

    def rows(self):
        """(key, value) pairs in a fixed order for serialization."""
        return [
            ("n", self.n),
            ("m", self.m),
            ("sum_k2", self.sum_k2),
            ("q", self.q),
            ("f0", self.f0),
            ("f1", self.f1),
            ("f2", self.f2),
            ("e_d", self.e_d),
            ("e_d2", self.e_d2),
            ("var_d", self.var_d),
        ]
