"""Exact enumeration of the classical structures attached to plane quartics.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._qatlas import (  # noqa: F401
    arf,
    aronhold_heptads,
    audit_summary,
    azygetic_triads,
    enneads,
    even_thetas,
    gopel_subsets,
    heptad_even_theta,
    line_classification,
    octad_labeling,
    octonion_multiply,
    octonion_table,
    octonion_table_matches_reference,
    odd_thetas,
    orbit_and_stabilizer,
    pair_rank,
    pairing,
    pgammal_2_8_order,
    poincare,
    point_count,
    q0,
    quadric_point_count,
    quadric_value,
    run_cli,
    s9_linear_group_order,
    sp6_order,
    steiner_complex,
    subspaces,
    syzygetic_tetrads,
    theta_eval,
)

__all__ = [
    "arf",
    "aronhold_heptads",
    "audit_summary",
    "azygetic_triads",
    "enneads",
    "even_thetas",
    "gopel_subsets",
    "heptad_even_theta",
    "line_classification",
    "octad_labeling",
    "octonion_multiply",
    "octonion_table",
    "octonion_table_matches_reference",
    "odd_thetas",
    "orbit_and_stabilizer",
    "pair_rank",
    "pairing",
    "pgammal_2_8_order",
    "poincare",
    "point_count",
    "q0",
    "quadric_point_count",
    "quadric_value",
    "run_cli",
    "s9_linear_group_order",
    "sp6_order",
    "steiner_complex",
    "subspaces",
    "syzygetic_tetrads",
    "theta_eval",
]

__version__ = "0.1.0"
