"""Arrangement statistics averaged over graph ensembles.

Covers the uniform fixed-edge-count ensemble G(n,m), uniformly random
labelled trees, degree-moment approximations (binomial, Poisson), generators,
and Monte Carlo curve estimation. Exact ensemble expectations are rational;
Monte Carlo output is float with standard errors.

The G(n,m) Monte Carlo walks a shuffled complete-edge vector once per
replica: the first m entries are a uniform G(n,m) sample simultaneously for
every m, so one shuffle yields a whole curve row set.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import _kernels
from .errors import InputError
from .graphs import Graph, build_graph, prufer_decode
from .moments import (
    expected_d,
    second_moment_from_counts,
    variance_from_counts,
)
from .randomness import replica_rng


# ---------------------------------------------------------------- G(n,m)

def gnm_degree_pmf(n: int, m: int, k: int) -> Fraction:
    """P(a fixed vertex has degree k) in uniform G(n,m): hypergeometric in
    the n-1 pairs incident to the vertex out of all C(n,2)."""
    total = comb(n, 2)
    if m < 0 or m > total:
        raise InputError(f"m={m} impossible on {n} vertices")
    if not (0 <= k <= max(n - 1, 0)):
        raise InputError(f"degree {k} out of range 0..{n - 1}")
    rest = total - (n - 1)
    if m - k < 0 or m - k > rest:
        return Fraction(0)
    return Fraction(comb(n - 1, k) * comb(rest, m - k), comb(total, m))


def gnm_expected_k2(n: int, m: int) -> Fraction:
    """E[<k^2>] over G(n,m), via the degree pmf (equals the per-vertex E[k^2])."""
    if n == 0:
        if m != 0:
            raise InputError("no edges fit on zero vertices")
        return Fraction(0)
    return sum(
        (gnm_degree_pmf(n, m, k) * k * k for k in range(n)), Fraction(0)
    )


def gnm_expected_variance_exact(n: int, m: int) -> Fraction:
    """E over G(n,m) of V[D]: the variance formula is linear in sum k^2, so
    plugging the exact expected sum k^2 gives the exact ensemble mean."""
    return variance_from_counts(n, m, n * gnm_expected_k2(n, m))


def gnm_expected_second_moment_exact(n: int, m: int) -> Fraction:
    return second_moment_from_counts(n, m, n * gnm_expected_k2(n, m))


def binomial_k2(n: int, m: int) -> Fraction:
    """<k^2> if degrees were Binomial(n-1, delta), delta = m/C(n,2)."""
    if n < 2:
        if m != 0:
            raise InputError(f"m={m} impossible on {n} vertices")
        return Fraction(0)
    delta = Fraction(m, comb(n, 2))
    return (n - 1) * delta * ((n - 2) * delta + 1)


def gnm_expected_variance_binomial(n: int, m: int) -> Fraction:
    """Binomial-degree approximation of the expected variance.

    Equals the variance formula with binomial_k2 substituted; vanishes
    exactly at m = 0 and m = C(n,2).
    """
    if n < 2:
        if m != 0:
            raise InputError(f"m={m} impossible on {n} vertices")
        return Fraction(0)
    return Fraction((n + 1) * m, 45) * (
        Fraction((8 - 5 * n) * m, n * (n - 1)) + Fraction(5 * n - 8, 2)
    )


def gnm_expected_second_moment_binomial(n: int, m: int) -> Fraction:
    """Binomial-degree approximation of E[E[D^2]]; identity:
    equals gnm_expected_variance_binomial + E[D]^2."""
    if n < 2:
        if m != 0:
            raise InputError(f"m={m} impossible on {n} vertices")
        return Fraction(0)
    return Fraction(m * (n + 1), 90) * (
        Fraction(2 * m * (5 * n * (n * n - 2) + 8), n * (n - 1)) + 5 * n - 8
    )


def poisson_k2(n: int, m: int) -> Fraction:
    """<k^2> if degrees were Poisson with mean 2m/n.

    Overshoots binomial_k2 by 4m^2/(n^2(n-1)): the Poisson tail ignores the
    degree cap at n-1.
    """
    if n < 1:
        raise InputError("poisson degree moment needs n >= 1")
    mean = Fraction(2 * m, n)
    return mean * (1 + mean)


def gnm_mstar(n: int) -> Fraction:
    """Edge count where the binomial variance approximation peaks: n(n-1)/4,
    i.e. density 1/2 of the complete graph, asymptotically."""
    if n < 2:
        raise InputError(f"variance peak needs n >= 2, got {n}")
    return Fraction(n * (n - 1), 4)


def _complete_edge_vector(n: int):
    pairs = list(combinations(range(n), 2))
    eu = np.asarray([u for u, _ in pairs], dtype=np.int64)
    ev = np.asarray([v for _, v in pairs], dtype=np.int64)
    return eu, ev


def gen_gnm(n: int, m: int, seed: int | None = None, rng=None) -> Graph:
    """Uniform G(n,m) sample: shuffle the complete edge vector, keep the
    first m entries."""
    total = comb(n, 2)
    if m < 0 or m > total:
        raise InputError(f"m={m} impossible on {n} vertices")
    if rng is None:
        rng = replica_rng(seed if seed is not None else 0, 0)
    eu, ev = _complete_edge_vector(n)
    order = rng.permutation(total)
    take = order[:m]
    return build_graph(
        n, [(int(eu[i]) + 1, int(ev[i]) + 1) for i in take]
    )


def gen_random_tree(n: int, seed: int | None = None, rng=None) -> Graph:
    """Uniform labelled tree via a uniformly random Prufer code."""
    if n < 1:
        raise InputError("trees need n >= 1")
    if rng is None:
        rng = replica_rng(seed if seed is not None else 0, 0)
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(1, 2)])
    code = [int(x) + 1 for x in rng.integers(0, n, size=n - 2)]
    return Graph(n=n, edges=frozenset(prufer_decode(code, n)))


# ------------------------------------------------- random labelled trees

def rlt_expected_k2(n: int) -> Fraction:
    """E[<k^2>] over uniform labelled trees: (1 - 1/n)(5 - 6/n)."""
    if n < 1:
        raise InputError("trees need n >= 1")
    return (1 - Fraction(1, n)) * (5 - Fraction(6, n))


def rlt_expected_variance(n: int) -> Fraction:
    """E over uniform labelled trees of V[D].

    Derived by substituting the expected degree moment into the tree variance
    formula; simplifies to (n+1)(n-1)(n-2)(3n-4)/(60n). See
    rlt_expected_variance_alternate for the inconsistent polynomial this
    replaces.
    """
    if n < 1:
        raise InputError("trees need n >= 1")
    return Fraction((n + 1) * (n - 1) * (n - 2) * (3 * n - 4), 60 * n)


def rlt_expected_variance_alternate(n: int) -> Fraction:
    """A published polynomial for the same quantity,
    (n+1)(n-1)(13n^2-54n+48)/(360n). It fails exhaustive enumeration
    (n=4: gives 5/12, true value 1); kept only so diagnostics can report
    both forms side by side. Do not use for computation."""
    if n < 1:
        raise InputError("trees need n >= 1")
    return Fraction((n + 1) * (n - 1) * (13 * n * n - 54 * n + 48), 360 * n)


def rlt_expected_second_moment(n: int) -> Fraction:
    """E over uniform labelled trees of E[D^2]:
    (n+2)(n+1)(n-1)(4n-3)(5n-4)/(180n)."""
    if n < 1:
        raise InputError("trees need n >= 1")
    return Fraction(
        (n + 2) * (n + 1) * (n - 1) * (4 * n - 3) * (5 * n - 4), 180 * n
    )


# ------------------------------------------------------- curve machinery

@dataclass(frozen=True)
class EnsembleSpec:
    """One ensemble: kind 'gnm' (fields n, m), 'gnp' (fields n, pi) or
    'random_labelled_tree' (field n)."""

    kind: str
    n: int
    m: int | None = None
    pi: Fraction | None = None

    def __post_init__(self):
        if self.kind not in ("gnm", "gnp", "random_labelled_tree"):
            raise InputError(f"unknown ensemble kind {self.kind!r}")
        if self.n < 0:
            raise InputError("n must be non-negative")
        if self.kind == "gnm":
            if self.m is None or not (0 <= self.m <= comb(self.n, 2)):
                raise InputError(f"gnm needs 0 <= m <= C(n,2), got {self.m}")
        if self.kind == "gnp":
            if self.pi is None or not (0 <= self.pi <= 1):
                raise InputError(f"gnp needs 0 <= pi <= 1, got {self.pi}")


@dataclass(frozen=True)
class CurveRow:
    parameter: int
    exact: Fraction
    approx: Fraction | None
    mc_mean: float | None
    mc_stderr: float | None
    replicas: int | None

    def __post_init__(self):
        if self.mc_mean is not None and not (self.replicas and self.replicas > 0):
            raise InputError("mc fields require a positive replica count")


@dataclass(frozen=True)
class EnsembleCurve:
    kind: str
    statistic: str
    n: int | None  # fixed n for gnm sweeps; None for tree sweeps over n
    rows: tuple[CurveRow, ...]

    def __post_init__(self):
        params = [r.parameter for r in self.rows]
        if params != sorted(params):
            raise InputError("curve rows must be sorted by parameter")


_GNM_EXACT = {
    "variance": gnm_expected_variance_exact,
    "second_moment": gnm_expected_second_moment_exact,
}
_GNM_APPROX = {
    ("variance", "binomial"): gnm_expected_variance_binomial,
    ("second_moment", "binomial"): gnm_expected_second_moment_binomial,
    ("variance", "poisson"): lambda n, m: variance_from_counts(
        n, m, n * poisson_k2(n, m)
    ),
    ("second_moment", "poisson"): lambda n, m: second_moment_from_counts(
        n, m, n * poisson_k2(n, m)
    ),
}
_TREE_EXACT = {
    "variance": rlt_expected_variance,
    "second_moment": rlt_expected_second_moment,
}


def _check_mc_args(statistic, T):
    if statistic not in ("variance", "second_moment"):
        raise InputError(f"unknown statistic {statistic!r}")
    if T < 0:
        raise InputError("replica count must be >= 0")
    if 0 < T < 2:
        raise InputError(f"{statistic} estimation needs at least 2 replicas")


def gnm_mc_sweep(n: int, T: int, seed: int, statistic: str = "variance"):
    """Monte Carlo means and stderrs of the per-graph statistic for every
    m in [0, C(n,2)], using one complete-edge shuffle per replica.

    Returns (means, stderrs) as float arrays of length C(n,2)+1.
    """
    M = comb(n, 2)
    all_u, all_v = _complete_edge_vector(n)
    mean = np.zeros(M + 1, dtype=np.float64)
    m2 = np.zeros(M + 1, dtype=np.float64)
    shift = None
    if statistic == "second_moment":
        # per-graph E[D^2] = V[D] + E[D]^2 and E[D] depends only on m
        shift = np.asarray(
            [float(expected_d(n, m)) ** 2 for m in range(M + 1)]
        )
    for rep in range(T):
        rng = replica_rng(seed, rep)
        order = rng.permutation(M)
        vals = _kernels.gnm_prefix_variances(n, all_u[order], all_v[order])
        if shift is not None:
            vals = vals + shift
        delta = vals - mean
        mean += delta / (rep + 1)
        m2 += delta * (vals - mean)
    stderr = np.sqrt(m2 / (T - 1)) / np.sqrt(T) if T >= 2 else np.zeros(M + 1)
    return mean, stderr


def tree_mc_stats(n: int, T: int, seed: int, statistic: str = "variance",
                  replica_base: int = 0):
    """Monte Carlo estimate over T (tree, arrangement) draws at one n.

    'variance': unbiased sample variance of D with its variance-of-variance
    stderr. 'second_moment': sample mean of D^2 with the mean's stderr.
    All moment sums are taken over exact integers; floats appear once at the
    end, so results are reproducible to the bit.
    """
    if n < 1:
        raise InputError("trees need n >= 1")
    codes = np.zeros((T, max(n - 2, 0)), dtype=np.int64)
    perms = np.empty((T, n), dtype=np.int64)
    for rep in range(T):
        rng = replica_rng(seed, replica_base + rep)
        if n >= 3:
            codes[rep] = rng.integers(0, n, size=n - 2)
        perms[rep] = rng.permutation(n)
    if n >= 2:
        d = _kernels.tree_draws_d(codes, perms)
    else:
        d = np.zeros(T, dtype=np.int64)
    dl = [int(x) for x in d]
    s1 = sum(dl)
    s2 = sum(x * x for x in dl)
    s4 = sum(x**4 for x in dl)
    if statistic == "second_moment":
        # averaging y = d^2, so the spread estimate needs fourth powers
        est = Fraction(s2, T)
        svar_y = (Fraction(s4, T) - est * est) * Fraction(T, T - 1)
        return float(est), float(svar_y / T) ** 0.5
    s3 = sum(x**3 for x in dl)
    mu = Fraction(s1, T)
    svar = (Fraction(s2, T) - mu * mu) * Fraction(T, T - 1)
    m4 = (s4 - 4 * mu * s3 + 6 * mu * mu * s2) / Fraction(T) - 3 * mu**4
    var_of_svar = (m4 - Fraction(T - 3, T - 1) * svar * svar) / T
    stderr = float(var_of_svar) ** 0.5 if var_of_svar > 0 else 0.0
    return float(svar), stderr


def mc_curve(kind: str, *, statistic: str = "variance", T: int = 0,
             seed: int = 0, n: int | None = None, m_values=None,
             n_values=None, approx: str | None = None) -> EnsembleCurve:
    """Exact + approximate + Monte Carlo curve for one ensemble family.

    kind 'gnm' sweeps m (default: every integer in [0, C(n,2)]) at fixed n;
    kind 'random_labelled_tree' sweeps n over n_values (default: a log grid).
    T = 0 disables Monte Carlo columns.
    """
    _check_mc_args(statistic, T)
    if approx is not None and approx not in ("binomial", "poisson"):
        raise InputError(f"unknown approximation {approx!r}")
    if kind == "gnm":
        if n is None or n < 0:
            raise InputError("gnm sweep needs n")
        M = comb(n, 2)
        if m_values is None:
            m_values = range(M + 1)
        m_values = sorted(set(int(m) for m in m_values))
        if m_values and not (0 <= m_values[0] and m_values[-1] <= M):
            raise InputError(f"m values outside [0, {M}]")
        exact_fn = _GNM_EXACT[statistic]
        mc_mean = mc_err = None
        if T > 0:
            mc_mean, mc_err = gnm_mc_sweep(n, T, seed, statistic)
        rows = []
        for m in m_values:
            rows.append(CurveRow(
                parameter=m,
                exact=exact_fn(n, m),
                approx=_GNM_APPROX[(statistic, approx)](n, m) if approx else None,
                mc_mean=float(mc_mean[m]) if mc_mean is not None else None,
                mc_stderr=float(mc_err[m]) if mc_mean is not None else None,
                replicas=T if T > 0 else None,
            ))
        return EnsembleCurve(kind=kind, statistic=statistic, n=n, rows=tuple(rows))
    if kind == "random_labelled_tree":
        if n_values is None:
            n_values = default_tree_grid()
        n_values = sorted(set(int(v) for v in n_values))
        if n_values and n_values[0] < 1:
            raise InputError("tree sweep needs n >= 1")
        if approx is not None:
            raise InputError("no degree approximation applies to the tree ensemble")
        exact_fn = _TREE_EXACT[statistic]
        rows = []
        for i, nn in enumerate(n_values):
            est = err = None
            if T > 0:
                est, err = tree_mc_stats(
                    nn, T, seed, statistic, replica_base=i * T
                )
            rows.append(CurveRow(
                parameter=nn,
                exact=exact_fn(nn),
                approx=None,
                mc_mean=est,
                mc_stderr=err,
                replicas=T if T > 0 else None,
            ))
        return EnsembleCurve(kind=kind, statistic=statistic, n=None, rows=tuple(rows))
    if kind == "gnp":
        raise InputError(
            "gnp ensembles are data-only here: no exact curve is defined"
        )
    raise InputError(f"unknown ensemble kind {kind!r}")


def default_tree_grid(lo: int = 3, hi: int = 100, points: int = 12) -> list[int]:
    """Roughly log-spaced integer grid for tree sweeps."""
    if lo < 1 or hi < lo:
        raise InputError("bad grid bounds")
    grid = np.unique(
        np.rint(np.geomspace(lo, hi, points)).astype(int)
    )
    return [int(v) for v in grid]
