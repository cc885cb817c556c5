"""
Theory Domain
"""

from tsvha.domains.theory.schemas.theory_schemas import (
    BoundParams,
    BoundRow,
    SelectionRow,
    SelectionVariant,
)
from tsvha.domains.theory.services.theory_service import (
    bound_constant_h,
    bound_sweep,
    c_prime,
    check_constraint,
    coefficient_c1,
    g_condition,
    g_epsilon,
    gaussian_tail_lower_bound,
    h_beta,
    h_condition,
    horizon_term,
    pseries_upper_bound,
    q_function,
    riemann_zeta,
    selection_probability,
    selection_table,
    regret_bound,
    tail_probability_bounds,
)

__all__ = [
    "BoundParams",
    "BoundRow",
    "SelectionRow",
    "SelectionVariant",
    "bound_constant_h",
    "bound_sweep",
    "c_prime",
    "check_constraint",
    "coefficient_c1",
    "g_condition",
    "g_epsilon",
    "gaussian_tail_lower_bound",
    "h_beta",
    "h_condition",
    "horizon_term",
    "pseries_upper_bound",
    "q_function",
    "riemann_zeta",
    "selection_probability",
    "selection_table",
    "regret_bound",
    "tail_probability_bounds",
]
