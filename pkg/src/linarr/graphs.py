"""Undirected simple graphs, linear arrangements, and their basic statistics.

A linear arrangement places the n vertices on positions 1..n of a line; the
length of an edge {u, v} is |pos(u) - pos(v)| and D is the sum of edge lengths.
Everything downstream (moments, bounds, significance) is built on the three
integers exposed here: n, m and sum(k^2) over the degree sequence.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import InputError, UndefinedStatistic


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with 1-based vertex labels.

    Vertex labels share the coordinate system of arrangement positions, so
    both run over 1..n.
    """

    n: int
    edges: frozenset[tuple[int, int]]  # canonical u < v pairs

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u - 1] += 1
            deg[v - 1] += 1
        return deg

    def endpoint_arrays(self):
        """0-based endpoint lists (eu, ev) in sorted edge order."""
        es = sorted(self.edges)
        return [u - 1 for u, _ in es], [v - 1 for _, v in es]


@dataclass(frozen=True)
class LinearArrangement:
    """Bijection vertex -> position; position[i-1] is where vertex i sits."""

    position: tuple[int, ...]

    def __post_init__(self):
        n = len(self.position)
        if sorted(self.position) != list(range(1, n + 1)):
            raise InputError("arrangement is not a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.position)

    def of(self, vertex: int) -> int:
        return self.position[vertex - 1]

    @staticmethod
    def identity(n: int) -> "LinearArrangement":
        return LinearArrangement(tuple(range(1, n + 1)))


def build_graph(n: int, edge_list) -> Graph:
    """Validate and canonicalize an edge list into a Graph.

    Rejects self-loops, duplicates (also under reversal) and out-of-range
    endpoints, naming the offending edge.
    """
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"edge ({u},{v}) out of range 1..{n}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise InputError(f"duplicate edge ({u},{v})")
        seen.add(e)
    return Graph(n=n, edges=frozenset(seen))


def _check_arrangement(g: Graph, a: LinearArrangement):
    if a.n != g.n:
        raise InputError(f"arrangement covers {a.n} vertices, graph has {g.n}")


def sum_edge_lengths(g: Graph, a: LinearArrangement) -> int:
    """D = sum over edges of |pos(u) - pos(v)|."""
    _check_arrangement(g, a)
    pos = a.position
    return sum(abs(pos[u - 1] - pos[v - 1]) for u, v in g.edges)


def length_spectrum(g: Graph, a: LinearArrangement) -> dict[int, int]:
    """Map edge length d -> number of edges of that length.

    Satisfies sum m(d) = m, sum d*m(d) = D and m(d) <= n - d (at most n - d
    pairs of positions are d apart).
    """
    _check_arrangement(g, a)
    pos = a.position
    return dict(Counter(abs(pos[u - 1] - pos[v - 1]) for u, v in g.edges))


def degree_spectrum(g: Graph) -> dict[int, int]:
    """Map degree k -> number of vertices of that degree."""
    return dict(Counter(g.degrees()))


def sum_squared_degrees(g: Graph) -> int:
    return sum(k * k for k in g.degrees())


def second_moment_degree(g: Graph) -> tuple[Fraction, int]:
    """(<k^2>, sum k^2). The mean needs n >= 1; the integer sum is always defined."""
    sk2 = sum_squared_degrees(g)
    if g.n == 0:
        raise UndefinedStatistic("<k^2> undefined for a graph with no vertices")
    return Fraction(sk2, g.n), sk2


def independent_pairs(g: Graph) -> tuple[int, int, int]:
    """(Q1, Q2, q): all edge pairs, adjacent pairs, and disjoint pairs.

    Q1 = m(m-1)/2, Q2 = sum C(k_i, 2), q = Q1 - Q2 = [m(m+1) - sum k^2]/2.
    """
    m = g.m
    q1 = m * (m - 1) // 2
    q2 = sum(comb(k, 2) for k in g.degrees())
    q = (m * (m + 1) - sum_squared_degrees(g)) // 2
    assert q == q1 - q2
    return q1, q2, q


SPECIAL_KINDS = ("empty", "single_edge", "linear_tree", "star_tree", "complete")


def make_special(kind: str, n: int) -> Graph:
    """Canonical instance of one of the named families.

    linear_tree is the path 1-2-...-n; star_tree has hub 1.
    """
    if kind == "empty":
        if n < 0:
            raise InputError("empty graph needs n >= 0")
        return build_graph(n, [])
    if kind == "single_edge":
        if n < 2:
            raise InputError("single edge needs n >= 2")
        return build_graph(n, [(1, 2)])
    if kind == "linear_tree":
        if n < 1:
            raise InputError("linear tree needs n >= 1")
        return build_graph(n, [(i, i + 1) for i in range(1, n)])
    if kind == "star_tree":
        if n < 1:
            raise InputError("star tree needs n >= 1")
        return build_graph(n, [(1, i) for i in range(2, n + 1)])
    if kind == "complete":
        if n < 0:
            raise InputError("complete graph needs n >= 0")
        return build_graph(n, list(combinations(range(1, n + 1), 2)))
    raise InputError(f"unknown special graph kind {kind!r}")


def prufer_decode(code, n: int) -> list[tuple[int, int]]:
    """Edges (1-based) of the labelled tree with the given Prufer code.

    code entries are vertex labels in 1..n; len(code) must be n - 2 (n >= 3).
    Linear-time pointer variant of the classic decoding.
    """
    if n < 3:
        raise InputError("prufer codes exist for n >= 3")
    if len(code) != n - 2:
        raise InputError(f"code length {len(code)} != n - 2")
    deg = [1] * n
    for x in code:
        if not (1 <= x <= n):
            raise InputError(f"code entry {x} out of range 1..{n}")
        deg[x - 1] += 1
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for x in code:
        x0 = x - 1
        edges.append((leaf + 1, x) if leaf + 1 < x else (x, leaf + 1))
        deg[x0] -= 1
        if deg[x0] == 1 and x0 < ptr:
            leaf = x0
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf + 1, n))
    return edges
