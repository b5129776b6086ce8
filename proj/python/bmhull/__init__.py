"""Mean perimeter constants of convex hulls of rotated planar Brownian motion.

Thin wrapper over the compiled core; see the repository README for the full
C++ API and the command-line tool.
"""

from bmhull._core import (  # noqa: F401
    analytic_ell,
    bessel_i0,
    chi3,
    convex_hull,
    density,
    dirichlet_l_chi3,
    ell_via_laplace,
    estimate_ell,
    hull_perimeter,
    inv_sqrt_moment,
    laplace_transform,
    max_abs_cdf,
    mellin_triangle,
    normal_cdf,
    preset_names,
    rect_integral,
    rotated_hull_perimeter,
    sample_halfplane_exit,
    sample_path,
    support_value,
    survival,
    verify_all,
)

__all__ = [
    "analytic_ell",
    "bessel_i0",
    "chi3",
    "convex_hull",
    "density",
    "dirichlet_l_chi3",
    "ell_via_laplace",
    "estimate_ell",
    "hull_perimeter",
    "inv_sqrt_moment",
    "laplace_transform",
    "max_abs_cdf",
    "mellin_triangle",
    "normal_cdf",
    "preset_names",
    "rect_integral",
    "rotated_hull_perimeter",
    "sample_halfplane_exit",
    "sample_path",
    "support_value",
    "survival",
    "verify_all",
]

__version__ = "0.1.0"
