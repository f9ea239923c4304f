"""Exact and heuristic means of time series under dynamic time warping."""

from ._dtwmean import (
    ResourceError,
    binary_condensed_dtw_sq,
    binary_dtw_sq,
    binary_mean,
    bsg,
    condense,
    constrained_sweep,
    dba,
    dtw_sq,
    dtw_sq_brute,
    edp_all_means,
    edp_mean,
    edp_mean_constrained,
    enumerate_paths,
    error_percentage,
    frechet_value,
    is_condensed,
    length_deviation,
    mal_mean,
    mean_brute,
    path_cost,
    performance_profile,
    psa_exact,
    random_walk,
    ssg,
    validate_path,
)

__all__ = [
    "ResourceError",
    "binary_condensed_dtw_sq",
    "binary_dtw_sq",
    "binary_mean",
    "bsg",
    "condense",
    "constrained_sweep",
    "dba",
    "dtw_sq",
    "dtw_sq_brute",
    "edp_all_means",
    "edp_mean",
    "edp_mean_constrained",
    "enumerate_paths",
    "error_percentage",
    "frechet_value",
    "is_condensed",
    "length_deviation",
    "mal_mean",
    "mean_brute",
    "path_cost",
    "performance_profile",
    "psa_exact",
    "random_walk",
    "ssg",
    "validate_path",
]
