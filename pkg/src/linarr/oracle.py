"""Brute-force ground truth for everything the closed forms claim.

The central object is the exact distribution of D over all n! arrangements.
For n <= 8 a cached (pair, permutation) edge-length table makes per-graph
histograms cheap enough to sweep hundreds of thousands of graphs; larger n
streams permutations without materializing the table. Pair-level expectations
(the E_phi oracle) only place the <= 4 distinct endpoint vertices, which keeps
them tractable at n = 15.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from . import _kernels
from .errors import CapExceeded, InputError
from .graphs import Graph, build_graph, make_special, prufer_decode
from .moments import f_counts, second_moment_d

DEFAULT_ARRANGEMENT_CAP = 10
TABLE_MAX_N = 8  # above this, stream instead of caching the length table


@dataclass(frozen=True)
class ExactDistribution:
    """Exact histogram of D over all n! arrangements of one graph."""

    n: int
    counts: tuple[tuple[int, int], ...]  # (d, count), sorted by d

    @property
    def total(self) -> int:
        return factorial(self.n)

    @property
    def d_min(self) -> int:
        return self.counts[0][0]

    @property
    def d_max(self) -> int:
        return self.counts[-1][0]

    def moment(self, order: int) -> Fraction:
        return Fraction(
            sum(c * d**order for d, c in self.counts), self.total
        )

    @property
    def e_d(self) -> Fraction:
        return self.moment(1)

    @property
    def e_d2(self) -> Fraction:
        return self.moment(2)

    @property
    def var_d(self) -> Fraction:
        return self.e_d2 - self.e_d ** 2

    def central_moment(self, order: int) -> Fraction:
        mu = self.e_d
        return Fraction(
            sum(c * (d - mu) ** order for d, c in self.counts), self.total
        )

    @property
    def w_d(self) -> Fraction:
        """Third central moment of D."""
        return self.central_moment(3)

    def cdf(self, x) -> Fraction:
        """Exact P(D <= x)."""
        return Fraction(sum(c for d, c in self.counts if d <= x), self.total)

    def rows(self):
        """(d, count, cumulative rational, cumulative float) for serialization."""
        acc = 0
        out = []
        for d, c in self.counts:
            acc += c
            p = Fraction(acc, self.total)
            out.append((d, c, p, float(p)))
        return out


@lru_cache(maxsize=4)
def _perm_matrix(n: int) -> np.ndarray:
    """All n! permutations of 0..n-1 in lexicographic order, int8 rows."""
    perms = np.asarray(list(itertools.permutations(range(n))), dtype=np.int8)
    perms.setflags(write=False)
    return perms


@lru_cache(maxsize=4)
def pair_length_table(n: int) -> np.ndarray:
    """int8 matrix: row per vertex pair (combinations order), column per
    lexicographic permutation; entries |pos(u) - pos(v)|."""
    perms = _perm_matrix(n)
    pairs = list(itertools.combinations(range(n), 2))
    table = np.empty((len(pairs), perms.shape[0]), dtype=np.int8)
    for r, (u, v) in enumerate(pairs):
        np.abs(perms[:, u] - perms[:, v], out=table[r])
    table.setflags(write=False)
    return table


@lru_cache(maxsize=8)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {
        uv: i for i, uv in enumerate(itertools.combinations(range(n), 2))
    }


def _counts_array_to_dist(n: int, counts: np.ndarray) -> ExactDistribution:
    nz = np.flatnonzero(counts)
    return ExactDistribution(
        n=n, counts=tuple((int(d), int(counts[d])) for d in nz)
    )


def distribution_from_rows(n: int, rows, m: int) -> ExactDistribution:
    """Histogram for a graph given as pair-table row indices (n <= TABLE_MAX_N)."""
    table = pair_length_table(n)
    counts = _kernels.distribution_from_table(
        table, np.asarray(rows, dtype=np.int64), m * max(n - 1, 0)
    )
    return _counts_array_to_dist(n, counts)


def enumerate_distribution(g: Graph, cap: int = DEFAULT_ARRANGEMENT_CAP) -> ExactDistribution:
    """Exact distribution of D for one graph by full enumeration.

    Hard-fails when n exceeds the cap; never truncates silently.
    """
    n = g.n
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the arrangement enumeration cap {cap}")
    eu, ev = g.endpoint_arrays()
    if 0 < n <= TABLE_MAX_N:
        pidx = _pair_index(n)
        rows = [pidx[(u, v)] for u, v in zip(eu, ev)]
        return distribution_from_rows(n, rows, g.m)
    counts = _kernels.stream_distribution(
        n, np.asarray(eu, dtype=np.int64), np.asarray(ev, dtype=np.int64)
    )
    return _counts_array_to_dist(n, counts)


def enumerate_e_phi(n: int, phi: int, cap: int = 15) -> Fraction:
    """Average d_i * d_j over all arrangements, for one fixed pair of edges
    sharing phi vertices.

    Only the 4 - phi distinct endpoints need placing: each ordered placement
    of those on distinct positions is equally likely, so the average over
    (n)_{4-phi} placements equals the average over all n! arrangements.
    """
    if phi not in (0, 1, 2):
        raise InputError(f"phi must be 0, 1 or 2, got {phi}")
    if n < 4 - phi:
        raise InputError(f"needs n >= {4 - phi} for phi={phi}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the placement enumeration cap {cap}")
    total = 0
    count = 0
    for pos in itertools.permutations(range(1, n + 1), 4 - phi):
        if phi == 2:
            prod = (pos[0] - pos[1]) ** 2
        elif phi == 1:
            # edges (a,b) and (a,c): pos = (p_a, p_b, p_c)
            prod = abs(pos[0] - pos[1]) * abs(pos[0] - pos[2])
        else:
            prod = abs(pos[0] - pos[1]) * abs(pos[2] - pos[3])
        total += prod
        count += 1
    return Fraction(total, count)


def star_d_tau(n: int, tau: int) -> int:
    """D of the n-star as a function of the hub's position tau.

    D depends on nothing else; the quadratic below sums |tau - j| over all
    other positions j.
    """
    if not (1 <= tau <= n):
        raise InputError(f"hub position {tau} out of range 1..{n}")
    return tau * tau - (n + 1) * tau + n * (n + 1) // 2


def solve_e01_system(n: int) -> tuple[Fraction, Fraction]:
    """Recover E0 and E1 from complete-graph and star data alone.

    Sets up E[D^2] = f0*E0 + f1*E1 + f2*E2 for the complete graph (where D is
    constant, so E[D^2] is its squared value) and the star (where E[D^2]
    follows from the hub-position values D_tau), and solves the 2x2 system.
    """
    if n < 4:
        raise InputError(f"system needs n >= 4, got {n}")
    from .moments import e_phi  # E2 is the only borrowed ingredient

    e2 = e_phi(n, 2)

    dk = Fraction(n * (n * n - 1), 6)
    ed2_complete = dk * dk
    ed2_star = Fraction(sum(star_d_tau(n, t) ** 2 for t in range(1, n + 1)), n)

    fk = f_counts(make_special("complete", n))
    fs = f_counts(make_special("star_tree", n))

    # [fk0 fk1][E0]   [ed2_complete - fk2*E2]
    # [fs0 fs1][E1] = [ed2_star     - fs2*E2]
    a, b, c, d = fk[0], fk[1], fs[0], fs[1]
    r1 = ed2_complete - fk[2] * e2
    r2 = ed2_star - fs[2] * e2
    det = Fraction(a * d - b * c)
    assert det != 0, f"singular system at n={n}"
    e0 = (r1 * d - b * r2) / det
    e1 = (a * r2 - c * r1) / det
    return e0, e1


def enumerate_labelled_trees(n: int, cap: int = 8):
    """All n^(n-2) labelled trees on vertices 1..n, one Graph each."""
    if n < 1:
        raise InputError("trees need n >= 1")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the tree enumeration cap {cap}")
    if n == 1:
        yield build_graph(1, [])
        return
    if n == 2:
        yield build_graph(2, [(1, 2)])
        return
    for code in itertools.product(range(1, n + 1), repeat=n - 2):
        yield Graph(n=n, edges=frozenset(prufer_decode(code, n)))


def enumerate_gnm(n: int, m: int, cap: int = 10**6):
    """All C(C(n,2), m) graphs with n vertices and m edges."""
    total_pairs = comb(n, 2)
    if m < 0 or m > total_pairs:
        raise InputError(f"m={m} impossible on {n} vertices")
    count = comb(total_pairs, m)
    if count > cap:
        raise CapExceeded(f"{count} graphs exceed the ensemble enumeration cap {cap}")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for edges in itertools.combinations(pairs, m):
        yield Graph(n=n, edges=frozenset(edges))


def distribution_sanity(g: Graph, dist: ExactDistribution) -> bool:
    """Internal consistency: total mass, moment agreement with closed forms."""
    ok = sum(c for _, c in dist.counts) == dist.total
    ok = ok and dist.e_d2 == second_moment_d(g)
    return ok
