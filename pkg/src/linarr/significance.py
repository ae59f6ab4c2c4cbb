"""Significance of an observed D against the uniform-arrangement null.

The z-score of an integer observation has an exactly rational square, so it
is kept as a sign plus an exact square (SignedSqrt) and only floated for
display. Tail bounds on P(D <= observed): Chebyshev-Cantelli for any
distribution, and a sharper form that assumes a symmetric unimodal null.
Monte Carlo utilities estimate p-values and central moments by sampling
arrangements of the fixed graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from . import _kernels
from .errors import InputError, UndefinedStatistic
from .graphs import Graph, sum_edge_lengths
from .moments import expected_d, variance_d
from .randomness import replica_rng


@dataclass(frozen=True)
class SignedSqrt:
    """sign * sqrt(square), with square kept exact."""

    sign: int
    square: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise InputError("sign must be -1, 0 or 1")
        if self.square < 0:
            raise InputError("square must be non-negative")
        if (self.sign == 0) != (self.square == 0):
            raise InputError("sign 0 iff square 0")

    def __float__(self) -> float:
        return self.sign * sqrt(self.square)

    def __neg__(self) -> "SignedSqrt":
        return SignedSqrt(sign=-self.sign, square=self.square)


def zscore(g: Graph, d_observed: int) -> SignedSqrt:
    """(d_observed - E[D]) / sqrt(V[D]), exact in the squared domain."""
    v = variance_d(g)
    if v == 0:
        raise UndefinedStatistic(
            f"zero variance on n={g.n}, m={g.m}: z-score undefined"
        )
    diff = d_observed - expected_d(g.n, g.m)
    sign = (diff > 0) - (diff < 0)
    return SignedSqrt(sign=sign, square=diff * diff / v)


def cantelli_bound(c_star: SignedSqrt) -> Fraction:
    """P(D <= observed) <= 1/(1 + c*^2), c* = -z. Vacuous (1) unless the
    observation sits strictly below the mean (c* > 0)."""
    if c_star.sign <= 0:
        return Fraction(1)
    return 1 / (1 + c_star.square)


def unimodal_bound(c_star: SignedSqrt) -> Fraction:
    """Tail bound assuming a symmetric unimodal null: 2/(9 c*^2) when
    c*^2 >= 4/9, else 1/2. Vacuous (1) unless c* > 0."""
    if c_star.sign <= 0:
        return Fraction(1)
    if c_star.square >= Fraction(4, 9):
        return Fraction(2, 9) / c_star.square
    return Fraction(1, 2)


def mean_edge_length(g: Graph, arr) -> Fraction:
    """Observed D split per edge."""
    if g.m == 0:
        raise UndefinedStatistic("mean edge length needs at least one edge")
    return Fraction(sum_edge_lengths(g, arr), g.m)


def _sample_d(g: Graph, replicas: int, seed: int, batch: int = 4096):
    eu, ev = g.endpoint_arrays()
    eu = np.asarray(eu, dtype=np.int64)
    ev = np.asarray(ev, dtype=np.int64)
    done = 0
    while done < replicas:
        t = min(batch, replicas - done)
        perms = np.empty((t, g.n), dtype=np.int64)
        for i in range(t):
            perms[i] = replica_rng(seed, done + i).permutation(g.n)
        yield _kernels.arrangements_d(eu, ev, perms)
        done += t


def mc_pvalue(g: Graph, d_observed: int, replicas: int, seed: int = 0,
              smooth: bool = False) -> float:
    """Monte Carlo left-tail p-value: proportion of sampled arrangements
    with D <= d_observed (ties count, matching the exact event).

    smooth=True applies add-one smoothing ((hits+1)/(R+1)), which keeps the
    estimate positive when no replica lands in the tail.
    """
    if replicas < 1:
        raise InputError("p-value estimation needs at least 1 replica")
    hits = 0
    for d in _sample_d(g, replicas, seed):
        hits += int(np.count_nonzero(d <= d_observed))
    if smooth:
        return (hits + 1) / (replicas + 1)
    return hits / replicas


def mc_central_moment(g: Graph, order: int, replicas: int, seed: int = 0) -> float:
    """Monte Carlo central moment of D of order 2, 3 or 4, centred on the
    exact mean. Sums are exact integers; one float conversion at the end."""
    if order not in (2, 3, 4):
        raise InputError(f"supported central moment orders: 2, 3, 4; got {order}")
    if replicas < order:
        raise InputError(f"order-{order} moment needs at least {order} replicas")
    sums = [0] * (order + 1)
    for d in _sample_d(g, replicas, seed):
        for x in d.tolist():
            xi = int(x)
            p = 1
            for j in range(1, order + 1):
                p *= xi
                sums[j] += p
    mu = expected_d(g.n, g.m)
    r = Fraction(replicas)
    raw = [Fraction(s) / r for s in sums]
    if order == 2:
        central = raw[2] - 2 * mu * raw[1] + mu * mu
    elif order == 3:
        central = raw[3] - 3 * mu * raw[2] + 3 * mu * mu * raw[1] - mu**3
    else:
        central = (raw[4] - 4 * mu * raw[3] + 6 * mu * mu * raw[2]
                   - 4 * mu**3 * raw[1] + mu**4)
    return float(central)


@dataclass(frozen=True)
class SignificanceReport:
    n: int
    m: int
    d_observed: int
    e_d: Fraction
    var_d: Fraction
    z: SignedSqrt
    c_star: SignedSqrt
    cantelli_bound: Fraction
    unimodal_bound: Fraction
    mc_p: float | None = None
    mc_replicas: int | None = None

    def __post_init__(self):
        assert self.c_star.sign == -self.z.sign
        assert self.z.square * self.var_d == (self.d_observed - self.e_d) ** 2

    @classmethod
    def from_observation(cls, g: Graph, d_observed: int,
                         mc_p: float | None = None,
                         mc_replicas: int | None = None) -> "SignificanceReport":
        z = zscore(g, d_observed)
        c = -z
        return cls(
            n=g.n,
            m=g.m,
            d_observed=d_observed,
            e_d=expected_d(g.n, g.m),
            var_d=variance_d(g),
            z=z,
            c_star=c,
            cantelli_bound=cantelli_bound(c),
            unimodal_bound=unimodal_bound(c),
            mc_p=mc_p,
            mc_replicas=mc_replicas,
        )

    def rows(self):
        out = [
            ("n", self.n),
            ("m", self.m),
            ("d_observed", self.d_observed),
            ("mean_length", Fraction(self.d_observed, self.m)),
            ("e_d", self.e_d),
            ("var_d", self.var_d),
            ("z", float(self.z)),
            ("z_squared", self.z.square),
            ("cantelli_p_upper", self.cantelli_bound),
            # assumes a symmetric unimodal null; not established in general
            ("unimodal_p_upper", self.unimodal_bound),
        ]
        if self.mc_p is not None:
            out.append(("mc_p", self.mc_p))
            out.append(("mc_replicas", self.mc_replicas))
        return out


# ------------------------------------------------- collection statistics

@dataclass(frozen=True)
class CollectionStats:
    """Aggregates over a collection of (graph, observed D) pairs.

    mean_d is the collection mean edge length: total D over total edges.
    mean_z sums one z per member and divides by the total edge count
    (z_norm='edges') or by the member count (z_norm='networks').
    """

    count: int
    total_vertices: int
    total_edges: int
    mean_d: Fraction
    mean_z: float | None
    z_norm: str
    skipped_zero_variance: int

    def rows(self):
        return [
            ("networks", self.count),
            ("total_vertices", self.total_vertices),
            ("total_edges", self.total_edges),
            ("mean_d", self.mean_d),
            ("mean_z", self.mean_z if self.mean_z is not None else ""),
            ("z_norm", self.z_norm),
            ("skipped_zero_variance", self.skipped_zero_variance),
        ]


def collection_stats(pairs, z_norm: str = "edges",
                     skip_degenerate: bool = False) -> CollectionStats:
    """Summarise (graph, observed) pairs.

    Zero-variance members either raise (default) or are dropped from the z
    average (skip_degenerate=True); when dropped, the z denominator counts
    only the members that contributed a z.
    """
    if z_norm not in ("edges", "networks"):
        raise InputError(f"unknown z normalisation {z_norm!r}")
    pairs = list(pairs)
    if not pairs:
        raise InputError("empty collection")
    total_m = sum(g.m for g, _ in pairs)
    total_n = sum(g.n for g, _ in pairs)
    total_d = sum(obs for _, obs in pairs)
    if total_m == 0:
        raise UndefinedStatistic("collection has no edges")
    z_sum = 0.0
    m_in = 0
    t_in = 0
    skipped = 0
    for g, obs in pairs:
        try:
            z = zscore(g, obs)
        except UndefinedStatistic:
            if not skip_degenerate:
                raise
            skipped += 1
            continue
        z_sum += float(z)
        m_in += g.m
        t_in += 1
    denom = m_in if z_norm == "edges" else t_in
    return CollectionStats(
        count=len(pairs),
        total_vertices=total_n,
        total_edges=total_m,
        mean_d=Fraction(total_d, total_m),
        mean_z=(z_sum / denom) if denom else None,
        z_norm=z_norm,
        skipped_zero_variance=skipped,
    )
