"""Exact interpolated weighted multiset sums and the laws they induce.

The core object is the polynomial theta_{n;k}(t): the total weight of
k-multisets drawn from the first n terms of a positive weight sequence,
graded by the number of adjacent equal pairs when the multiset is written
in weakly decreasing order.  Five independent constructions of it are
cross-checked against a brute-force enumerator, and the normalized
coefficient vectors give exact distributions, moments, and limit-regime
diagnostics for that adjacency statistic.
"""

from .distributions import (
    FloatPmf,
    MomentReport,
    Pmf,
    ScanRow,
    bernstein_pgf,
    bezier_coeffs,
    d_n_pmf,
    expected_sigma_zeta,
    hypergeom_moments,
    hypergeom_pmf,
    limit_scan,
    marginal_moments,
    marginal_pmf,
    marginal_zeta_pgf,
    moments,
    multiset_sigma_closed_moments,
    pmf_moments,
    s_infinity_2_exact,
    s_infinity_2_pmf,
    s_pmf,
    sum_theorem_pmf,
    sum_theorem_r_pmf,
    tv_distance,
)
from .exact import Poly, Series, binomial, format_rational, parse_rational
from .oracle import (
    BudgetExceededError,
    compositions,
    enumerate_multisets,
    sigma,
    theta_bruteforce,
)
from .theta import (
    ALGORITHMS,
    GradedValue,
    ThetaPoly,
    partition_series,
    prodinger_half,
    theta_bell,
    theta_convolution,
    theta_det,
    theta_infinite_zeta,
    theta_multi_eval,
    theta_newton,
    theta_ordered_partitions,
    theta_partial_fraction,
    theta_product,
    theta_qt,
    zeta_star_ones,
    zeta_t_ones,
)
from .weights import (
    CustomWeights,
    LinearWeights,
    OnesWeights,
    QModifiedWeights,
    WeightConfigError,
    WeightSequence,
    ZetaWeights,
    builtin_weights,
    load_weight_config,
    parse_weight_config,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "BudgetExceededError",
    "CustomWeights",
    "FloatPmf",
    "GradedValue",
    "LinearWeights",
    "MomentReport",
    "OnesWeights",
    "Pmf",
    "Poly",
    "QModifiedWeights",
    "ScanRow",
    "Series",
    "ThetaPoly",
    "WeightConfigError",
    "WeightSequence",
    "ZetaWeights",
    "bernstein_pgf",
    "bezier_coeffs",
    "binomial",
    "builtin_weights",
    "compositions",
    "d_n_pmf",
    "enumerate_multisets",
    "expected_sigma_zeta",
    "format_rational",
    "hypergeom_moments",
    "hypergeom_pmf",
    "limit_scan",
    "load_weight_config",
    "marginal_moments",
    "marginal_pmf",
    "marginal_zeta_pgf",
    "moments",
    "multiset_sigma_closed_moments",
    "parse_rational",
    "parse_weight_config",
    "partition_series",
    "pmf_moments",
    "prodinger_half",
    "s_infinity_2_exact",
    "s_infinity_2_pmf",
    "s_pmf",
    "sigma",
    "sum_theorem_pmf",
    "sum_theorem_r_pmf",
    "theta_bell",
    "theta_bruteforce",
    "theta_convolution",
    "theta_det",
    "theta_infinite_zeta",
    "theta_multi_eval",
    "theta_newton",
    "theta_ordered_partitions",
    "theta_partial_fraction",
    "theta_product",
    "theta_qt",
    "tv_distance",
    "zeta_star_ones",
    "zeta_t_ones",
    "__version__",
]
