"""Reference (numpy / pure Python) implementations of the hot kernels.

Semantics contract shared with the compiled backend:
  - vertices are 0-based here; positions may be 0- or 1-based (only
    differences matter);
  - all floating-point results are produced by the exact same sequence of
    double operations as the compiled code, so outputs are bit-identical.
"""
import itertools
import math

import numpy as np


def distribution_from_table(table, rows, dmax):
    """Histogram of column sums of table[rows].

    table: int8 (n_pairs, n_perms) edge-length-per-arrangement matrix;
    rows: int64 pair indices of the graph's edges; returns int64 counts of
    length dmax + 1.
    """
    if len(rows) == 0:
        out = np.zeros(dmax + 1, dtype=np.int64)
        out[0] = table.shape[1]
        return out
    sums = np.add.reduce(table[rows], axis=0, dtype=np.int64)
    return np.bincount(sums, minlength=dmax + 1).astype(np.int64)


def stream_distribution(n, eu, ev):
    """Exact D histogram over all n! arrangements, without a cached table."""
    m = len(eu)
    dmax = m * max(n - 1, 0)
    counts = np.zeros(dmax + 1, dtype=np.int64)
    if n == 0:
        counts[0] = 1
        return counts
    if m == 0:
        counts[0] = math.factorial(n)
        return counts
    eu = np.asarray(eu, dtype=np.int64)
    ev = np.asarray(ev, dtype=np.int64)
    chunk = 40320
    it = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            break
        perms = np.asarray(block, dtype=np.int8)
        d = np.zeros(len(block), dtype=np.int64)
        for k in range(m):
            d += np.abs(perms[:, eu[k]].astype(np.int64) - perms[:, ev[k]])
        counts += np.bincount(d, minlength=dmax + 1)
    return counts


def gnm_prefix_variances(n, pu, pv):
    """V[D] of every prefix of a shuffled complete-edge vector.

    pu, pv: the shuffled endpoint arrays (0-based), length M. Returns
    float64[M + 1]; entry m is the exact variance of the graph made of the
    first m edges, evaluated as (n+1)*num/180 with the integer
    num = 4m(2(n-1) - m) + (n-4)*sum_k2.
    """
    M = len(pu)
    out = np.zeros(M + 1, dtype=np.float64)
    deg = [0] * n
    sk2 = 0
    for t in range(M):
        u = int(pu[t])
        v = int(pv[t])
        # sum k^2 gains (k_u+1)^2 - k_u^2 + (k_v+1)^2 - k_v^2
        sk2 += 2 * deg[u] + 2 * deg[v] + 2
        deg[u] += 1
        deg[v] += 1
        m = t + 1
        num = 4 * m * (2 * (n - 1) - m) + (n - 4) * sk2
        out[m] = float(n + 1) * float(num) / 180.0
    return out


def _decode_d(code, pos, n):
    # Prufer decode fused with length accumulation; 0-based labels
    deg = [1] * n
    for x in code:
        deg[x] += 1
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    total = 0
    for x in code:
        total += abs(pos[leaf] - pos[x])
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    return total + abs(pos[leaf] - pos[n - 1])


def tree_draws_d(codes, perms):
    """D of each (Prufer code, arrangement) draw.

    codes: int64 (T, n-2) entries in [0, n); perms: int64 (T, n) positions.
    """
    T, n = perms.shape
    out = np.empty(T, dtype=np.int64)
    codes_l = codes.tolist()
    perms_l = perms.tolist()
    for i in range(T):
        out[i] = _decode_d(codes_l[i], perms_l[i], n)
    return out


def arrangements_d(eu, ev, perms):
    """D of a fixed graph under each arrangement row of perms (R, n)."""
    if len(eu) == 0:
        return np.zeros(perms.shape[0], dtype=np.int64)
    pu = perms[:, np.asarray(eu, dtype=np.int64)].astype(np.int64)
    pv = perms[:, np.asarray(ev, dtype=np.int64)].astype(np.int64)
    return np.abs(pu - pv).sum(axis=1)
