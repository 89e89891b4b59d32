"""Exact free-group Fourier analysis at desk scale.

Words, truncated noncommutative series, the bi-invariant dictionary order,
conditional-negativity and lacunarity certificates, and compression-based
norm estimates, all backed by the C++ core.
"""

from lacunae._core import (  # noqa: F401
    BudgetError,
    FourierElement,
    InputError,
    UndecidedOrderError,
    Word,
    apply_semigroup,
    ball,
    bmo_defect,
    bmo_norm_estimate,
    c_delta,
    cnd_gram_test,
    coefficient_gap_demo,
    evaluate_length,
    fourier_from_json,
    h1_integrand,
    h1_norm_estimate,
    integer_lacunary,
    is_positive,
    j_coefficient,
    jab_decomposition,
    lambda4_check,
    magnus_embed,
    operator_norm_estimate,
    order_compare,
    paley_split,
    positive_part_split,
    prop51_check,
    psi_lacunary_delta,
    reduce,
    reh1_norm,
    rudin_count,
    rudin_lacunarity_estimate,
    schoenberg_test,
    subgroup_membership,
    theorem1_check,
    trace_moment,
    transference_check,
    __version__,
)
