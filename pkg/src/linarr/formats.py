"""File formats: edge lists, arrangements, and CSV/TSV report emission.

Edge-list text: optional '#' comment lines, then one "n m" header line,
then m lines "u v" (1-based). Arrangement text: one line of n integers,
the positions of vertices 1..n in order.

CSV values render deterministically: exact rationals via str(Fraction)
("1084/5", "96"), floats via repr, absent values as empty fields.
"""
from __future__ import annotations

import csv
from fractions import Fraction
from math import comb

from .errors import InputError
from .graphs import Graph, LinearArrangement, build_graph
from .moments import special_table


def read_edge_list(text: str) -> Graph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        lines.append((lineno, s))
    if not lines:
        raise InputError("empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise InputError(f"line {lineno}: expected 'n m' header, got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"line {lineno}: non-integer header {header!r}") from None
    edges = []
    for lineno, s in lines[1:]:
        parts = s.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {s!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"line {lineno}: non-integer edge {s!r}") from None
    if len(edges) != m:
        raise InputError(f"header says m={m} but found {len(edges)} edges")
    return build_graph(n, edges)


def write_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    for u, v in sorted(g.edges):
        out.append(f"{u} {v}")
    return "\n".join(out) + "\n"


def read_arrangement(text: str, n: int) -> LinearArrangement:
    parts = text.split()
    if len(parts) != n:
        raise InputError(f"expected {n} positions, got {len(parts)}")
    try:
        pos = tuple(int(p) for p in parts)
    except ValueError:
        raise InputError("non-integer position in arrangement") from None
    return LinearArrangement(position=pos)


def write_arrangement(arr: LinearArrangement) -> str:
    return " ".join(str(p) for p in arr.position) + "\n"


def render(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (int, Fraction)):
        return str(v)
    return str(v)


def _decimal(v) -> str:
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return repr(float(v))
    if isinstance(v, float):
        return repr(v)
    return ""


def _writer(fh, fmt: str):
    if fmt not in ("csv", "tsv"):
        raise InputError(f"unknown format {fmt!r}")
    return csv.writer(fh, delimiter="," if fmt == "csv" else "\t",
                      lineterminator="\n")


def write_report(rows, fh, fmt: str = "csv"):
    """key -> value table with a float rendering alongside each exact value."""
    w = _writer(fh, fmt)
    w.writerow(["key", "value", "decimal"])
    for key, value in rows:
        w.writerow([key, render(value), _decimal(value)])


def write_distribution(dist, fh, fmt: str = "csv"):
    w = _writer(fh, fmt)
    w.writerow(["d", "count", "cum_p", "cum_p_float"])
    for d, count, cum, cum_f in dist.rows():
        w.writerow([d, count, render(cum), repr(cum_f)])


def _dkn(n: int) -> Fraction:
    return Fraction(n * (n * n - 1), 6)


def write_curve(curve, fh, fmt: str = "csv", normalize: bool = False):
    """EnsembleCurve table. Tree sweeps carry the path/star exact values for
    the same statistic as reference columns. normalize adds the link density
    and the values divided by D of the complete graph."""
    w = _writer(fh, fmt)
    tree = curve.kind == "random_labelled_tree"
    header = ["parameter", "exact", "approx", "mc_mean", "mc_stderr", "replicas"]
    if tree:
        header += ["linear_tree_exact", "star_tree_exact"]
    if normalize:
        header += ["delta", "exact_norm", "mc_mean_norm"]
    w.writerow(header)
    stat_index = 1 if curve.statistic == "second_moment" else 2
    for row in curve.rows:
        n = curve.n if not tree else row.parameter
        m = row.parameter if not tree else max(row.parameter - 1, 0)
        cells = [
            row.parameter,
            render(row.exact),
            render(row.approx),
            render(row.mc_mean),
            render(row.mc_stderr),
            render(row.replicas),
        ]
        if tree:
            nn = row.parameter
            lin = special_table("linear_tree", nn)[stat_index] if nn >= 2 else None
            star = special_table("star_tree", nn)[stat_index] if nn >= 1 else None
            cells += [render(lin), render(star)]
        if normalize:
            pairs = comb(n, 2)
            dkn = _dkn(n)
            if pairs == 0 or dkn == 0:
                cells += ["", "", ""]
            else:
                cells += [
                    render(Fraction(m, pairs)),
                    render(row.exact / dkn),
                    render(row.mc_mean / float(dkn)) if row.mc_mean is not None else "",
                ]
        w.writerow(cells)


def write_treebank(sentences, stats, fh, fmt: str = "csv"):
    """One row per sentence (z columns empty on zero-variance graphs), then
    a summary row labelled __collection__."""
    from .errors import UndefinedStatistic
    from .moments import expected_d, variance_d
    from .significance import SignificanceReport

    w = _writer(fh, fmt)
    w.writerow(["label", "n", "m", "d_observed", "mean_length",
                "e_d", "var_d", "z", "cantelli_p_upper"])
    for s in sentences:
        g = s.graph
        mean_len = Fraction(s.observed, g.m) if g.m else None
        try:
            rep = SignificanceReport.from_observation(g, s.observed)
            z_cell, p_cell = repr(float(rep.z)), render(rep.cantelli_bound)
        except UndefinedStatistic:
            z_cell, p_cell = "", ""
        w.writerow([
            s.label, g.n, g.m, s.observed, render(mean_len),
            render(expected_d(g.n, g.m)), render(variance_d(g)),
            z_cell, p_cell,
        ])
    w.writerow([
        "__collection__", stats.total_vertices, stats.total_edges, "",
        render(stats.mean_d), "", "",
        repr(stats.mean_z) if stats.mean_z is not None else "",
        "",
    ])
