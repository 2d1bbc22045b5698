"""Parking functions and k-Naples parking functions.

Exact enumeration and statistics: the backup-aware parking simulator, fiber
sizes and members of the outcome map, three counting routes, fiber-size
generating functions, area statistics with their q-distributions, and the
labeled lattice-path bijections.
"""

from naplespf._core import (
    __version__,
    ResourceLimitError,
    admissible_sets,
    area,
    area_distribution,
    area_k,
    c_coeff,
    count_decreasing_npf,
    count_npf_permsum,
    count_npf_recursive,
    count_pf_closed,
    decreasing_npf_check,
    decreasing_to_klattice,
    ell,
    ell_profile,
    ell_rev,
    fiber_area_poly,
    fiber_gf_direct,
    fiber_gf_recursive,
    fiber_members,
    fiber_size,
    is_naples_pf,
    labeled_dyck_to_pf,
    latex_polynomial,
    log_gf,
    oracle_fibers,
    pf_to_labeled_dyck,
    phi_k,
    q_int,
    qt_distribution,
    render_svg,
    render_tikz,
    simulate,
    verify,
)

__all__ = [
    "ResourceLimitError",
    "admissible_sets",
    "area",
    "area_distribution",
    "area_k",
    "c_coeff",
    "count_decreasing_npf",
    "count_npf_permsum",
    "count_npf_recursive",
    "count_pf_closed",
    "decreasing_npf_check",
    "decreasing_to_klattice",
    "ell",
    "ell_profile",
    "ell_rev",
    "fiber_area_poly",
    "fiber_gf_direct",
    "fiber_gf_recursive",
    "fiber_members",
    "fiber_size",
    "is_naples_pf",
    "labeled_dyck_to_pf",
    "latex_polynomial",
    "log_gf",
    "oracle_fibers",
    "pf_to_labeled_dyck",
    "phi_k",
    "q_int",
    "qt_distribution",
    "render_svg",
    "render_tikz",
    "simulate",
    "verify",
]
