"""Exact moments, bounds and significance of the sum of edge lengths D
under uniformly random linear arrangements of a graph's vertices."""
from ._kernels import backend
from .bounds import (
    BoundsReport,
    bhatia_davis_minla_upper,
    d_star,
    f_of_d0,
    minla_lower,
    naive_max,
    sharma_minla_upper,
    upper_combined,
    upper_dm,
    upper_em,
)
from .ensembles import (
    EnsembleCurve,
    EnsembleSpec,
    binomial_k2,
    gen_gnm,
    gen_random_tree,
    gnm_degree_pmf,
    gnm_expected_k2,
    gnm_expected_variance_binomial,
    gnm_expected_variance_exact,
    gnm_mstar,
    mc_curve,
    poisson_k2,
    rlt_expected_k2,
    rlt_expected_second_moment,
    rlt_expected_variance,
)
from .errors import CapExceeded, InputError, LinarrError, UndefinedStatistic
from .graphs import (
    Graph,
    LinearArrangement,
    build_graph,
    degree_spectrum,
    length_spectrum,
    make_special,
    prufer_decode,
    second_moment_degree,
    sum_edge_lengths,
    sum_squared_degrees,
)
from .moments import (
    MomentsReport,
    e_phi,
    expected_d,
    f_counts,
    hubiness,
    second_moment_d,
    special_table,
    tree_moments,
    variance_d,
)
from .oracle import (
    ExactDistribution,
    enumerate_distribution,
    enumerate_e_phi,
    enumerate_gnm,
    enumerate_labelled_trees,
    solve_e01_system,
)
from .randomness import replica_rng
from .significance import (
    CollectionStats,
    SignedSqrt,
    SignificanceReport,
    cantelli_bound,
    collection_stats,
    mc_central_moment,
    mc_pvalue,
    unimodal_bound,
    zscore,
)

__version__ = "0.1.0"

__all__ = [
    "backend",
    "BoundsReport",
    "bhatia_davis_minla_upper",
    "d_star",
    "f_of_d0",
    "minla_lower",
    "naive_max",
    "sharma_minla_upper",
    "upper_combined",
    "upper_dm",
    "upper_em",
    "EnsembleCurve",
    "EnsembleSpec",
    "binomial_k2",
    "gen_gnm",
    "gen_random_tree",
    "gnm_degree_pmf",
    "gnm_expected_k2",
    "gnm_expected_variance_binomial",
    "gnm_expected_variance_exact",
    "gnm_mstar",
    "mc_curve",
    "poisson_k2",
    "rlt_expected_k2",
    "rlt_expected_second_moment",
    "rlt_expected_variance",
    "CapExceeded",
    "InputError",
    "LinarrError",
    "UndefinedStatistic",
    "Graph",
    "LinearArrangement",
    "build_graph",
    "degree_spectrum",
    "length_spectrum",
    "make_special",
    "prufer_decode",
    "second_moment_degree",
    "sum_edge_lengths",
    "sum_squared_degrees",
    "MomentsReport",
    "e_phi",
    "expected_d",
    "f_counts",
    "hubiness",
    "second_moment_d",
    "special_table",
    "tree_moments",
    "variance_d",
    "ExactDistribution",
    "enumerate_distribution",
    "enumerate_e_phi",
    "enumerate_gnm",
    "enumerate_labelled_trees",
    "solve_e01_system",
    "replica_rng",
    "CollectionStats",
    "SignedSqrt",
    "SignificanceReport",
    "cantelli_bound",
    "collection_stats",
    "mc_central_moment",
    "mc_pvalue",
    "unimodal_bound",
    "zscore",
]
