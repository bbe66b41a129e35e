"""Sabban frames, geodesic curvature and Smarandache curves on the unit sphere."""

from ._core import (  # noqa: F401
    ConfigError,
    Curve,
    InvalidRadiusError,
    NumericalError,
    OutOfRangeError,
    SabbanFrame,
    __version__,
    arclength_total,
    curve_from_expressions,
    d_beta,
    erratum_report,
    erratum_sample_grid,
    fixture_great_circle,
    fixture_latitude_circle,
    fixture_paper_example,
    generate,
    geodesic_curvature,
    is_unit_speed,
    kappa_beta_definitional,
    kappa_beta_derived,
    kappa_beta_printed,
    kappa_prime,
    lambda_triple_derived,
    lambda_triple_printed,
    reparameterize_unit_speed,
    sabban_frame,
    smarandache_point,
    speed_ratio,
    tangent_beta,
    verify_sabban_odes,
)
