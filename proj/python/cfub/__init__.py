"""Central Fubini-like numbers and polynomials (exact C++ core)."""

from ._cfub import (  # noqa: F401
    asymptotic,
    c_number,
    c_poly,
    c_poly_plain,
    central_t_table,
    delta_zero_power,
    integral_representation,
    stirling2_table,
    verify,
)

__all__ = [
    "asymptotic",
    "c_number",
    "c_poly",
    "c_poly_plain",
    "central_t_table",
    "delta_zero_power",
    "integral_representation",
    "stirling2_table",
    "verify",
]
