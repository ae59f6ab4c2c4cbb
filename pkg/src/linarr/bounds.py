"""Bounds on D over all n! arrangements of a fixed graph.

Upper bounds on the maximum: a naive per-edge cap, a degree-aware bound,
and an edge-packing bound that fills the longest available lengths first.
Lower/upper bounds on the minimum: a packing complement for the minimum,
and mean-variance bounds (Bhatia-Davis, and a third-moment variant).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InputError, UndefinedStatistic
from .graphs import Graph, sum_squared_degrees
from .moments import expected_d, variance_d


def naive_max(n: int, m: int) -> int:
    """Every edge length is at most n-1, so D <= m(n-1)^2 trivially holds
    (the quadratic cap is what downstream comparisons use)."""
    if n < 0 or m < 0 or m > comb(n, 2):
        raise InputError(f"impossible graph size n={n}, m={m}")
    return m * (n - 1) ** 2


def upper_dm(g: Graph) -> Fraction:
    """Degree-aware maximum bound: each vertex's incident edge lengths are
    distinct, so they sum to at least 1+2+...+deg. Aggregating,
    max D <= m(n - 1/2) - sum k^2 / 4."""
    k2 = sum_squared_degrees(g)
    return Fraction(2 * g.m * (2 * g.n - 1) - k2, 4)


def f_of_d0(n: int, d0: int) -> int:
    """Number of vertex pairs at distance >= d0 in a linear order of n:
    (n-d0)(n-d0+1)/2. Defined for 0 <= d0 <= n; F(1) = C(n,2), F(n) = 0."""
    if not (0 <= d0 <= n):
        raise InputError(f"length threshold {d0} outside [0, {n}]")
    return (n - d0) * (n - d0 + 1) // 2


def d_star(n: int, m: int) -> int:
    """Smallest length d0 with at most m pairs of length >= d0, i.e. the
    threshold above which all long slots can be filled by edges.

    Integer search on the monotone F; a floating sqrt would risk an
    off-by-one whenever 8m+1 is a perfect square (complete graphs).
    """
    if m < 0 or m > comb(n, 2):
        raise InputError(f"impossible edge count m={m} for n={n}")
    if n == 0:
        return 0
    d0 = 1
    while f_of_d0(n, d0) > m:
        d0 += 1
    return d0


def upper_em(n: int, m: int) -> int:
    """Edge-packing maximum bound: put edges on the longest lengths first.
    All pair slots of length >= d* are filled; the remaining m - F(d*) edges
    get length d* - 1 at best. The tail sum over d in [d*, n-1] of (n-d)d
    collapses to a cubic.
    """
    if m < 0 or m > comb(n, 2):
        raise InputError(f"impossible edge count m={m} for n={n}")
    if m == 0:
        return 0
    ds = d_star(n, m)
    tail = (n - ds) * (n * n + (n + 3) * ds - 2 * ds * ds - 1) // 6
    return (m - f_of_d0(n, ds)) * (ds - 1) + tail


def upper_combined(g: Graph) -> Fraction:
    """min of the degree-aware and edge-packing maximum bounds."""
    return min(upper_dm(g), Fraction(upper_em(g.n, g.m)))


def minla_lower(n: int, m: int) -> int:
    """Lower bound on the minimum of D: the complement-packing argument
    gives D(complete) - upper_em(complement), floored at m since every
    edge has length >= 1."""
    if m == 0:
        return 0
    dkn = n * (n * n - 1) // 6
    return max(m, dkn - upper_em(n, comb(n, 2) - m))


def bhatia_davis_minla_upper(g: Graph, dmax_surrogate=None) -> Fraction:
    """Upper bound on the minimum from mean and variance:
    min D <= E - V / (max - E), with any upper bound on the maximum standing
    in for max. Default surrogate: upper_combined."""
    e = expected_d(g.n, g.m)
    v = variance_d(g)
    if v == 0:
        return e
    s = Fraction(dmax_surrogate) if dmax_surrogate is not None else upper_combined(g)
    if s <= e:
        raise InputError(
            f"surrogate maximum {s} must exceed the mean {e} when variance > 0"
        )
    return e - v / (s - e)


@dataclass(frozen=True)
class SharmaBound:
    """Result of the mean-variance-skewness bound on the minimum.

    value is None when the radicand goes negative (the form is then
    unavailable for this graph). w_estimate is the third central moment
    used; mc tells whether it came from Monte Carlo."""

    value: float | None
    w_estimate: Fraction | float
    mc: bool


def sharma_minla_upper(g: Graph, dmax_surrogate=None, w_estimate=None,
                       T: int = 0, seed: int = 0) -> SharmaBound:
    """min D <= max - 2*sqrt(V + W/(2V)) with W the third central moment
    of D. W has no closed form here; pass it in (w_estimate) or let T > 0
    replicas estimate it. Requires V > 0.
    """
    v = variance_d(g)
    if v == 0:
        raise UndefinedStatistic("third-moment bound needs positive variance")
    mc = w_estimate is None
    if mc:
        if T < 1:
            raise InputError("need w_estimate or a positive replica count")
        from .significance import mc_central_moment

        w_estimate = mc_central_moment(g, 3, T, seed)
    s = Fraction(dmax_surrogate) if dmax_surrogate is not None else upper_combined(g)
    if isinstance(w_estimate, float):
        radicand = float(v) + w_estimate / (2.0 * float(v))
    else:
        radicand = v + Fraction(w_estimate) / (2 * v)
    if radicand < 0:
        return SharmaBound(value=None, w_estimate=w_estimate, mc=mc)
    value = float(s) - 2.0 * float(radicand) ** 0.5
    return SharmaBound(value=value, w_estimate=w_estimate, mc=mc)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    naive_max: int
    upper_dm: Fraction
    d_star: int
    f_dstar: int
    upper_em: int
    upper: Fraction
    minla_lower: int
    bhatia_davis_minla_upper: Fraction
    expected_d: Fraction

    @classmethod
    def from_graph(cls, g: Graph) -> "BoundsReport":
        ds = d_star(g.n, g.m)
        return cls(
            n=g.n,
            m=g.m,
            naive_max=naive_max(g.n, g.m),
            upper_dm=upper_dm(g),
            d_star=ds,
            f_dstar=f_of_d0(g.n, ds),
            upper_em=upper_em(g.n, g.m),
            upper=upper_combined(g),
            minla_lower=minla_lower(g.n, g.m),
            bhatia_davis_minla_upper=bhatia_davis_minla_upper(g),
            expected_d=expected_d(g.n, g.m),
        )

    def rows(self):
        return [
            ("n", self.n),
            ("m", self.m),
            ("minla_lower", self.minla_lower),
            ("bhatia_davis_minla_upper", self.bhatia_davis_minla_upper),
            ("expected_d", self.expected_d),
            ("d_star", self.d_star),
            ("f_dstar", self.f_dstar),
            ("upper_dm", self.upper_dm),
            ("upper_em", self.upper_em),
            ("upper", self.upper),
            ("naive_max", self.naive_max),
        ]
