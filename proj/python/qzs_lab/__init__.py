"""Spectral solver and estimate probes for the quantum Zakharov system on the torus.

Coefficient arrays list the Fourier modes k = -M/2, ..., M/2 - 1 in order.
"""

from ._core import (
    QzsError,
    bilinear_corpus,
    conserved,
    discontinuity_demo,
    h_lower_bound_scan,
    necessity_scan,
    plane_wave_data,
    random_smooth_data,
    region_membership,
    resonance_survey,
    semiclassical_experiment,
    sigma1,
    sigma2,
    smooth_reference_data,
    sobolev_norm,
    solve,
)

__all__ = [
    "QzsError",
    "bilinear_corpus",
    "conserved",
    "discontinuity_demo",
    "h_lower_bound_scan",
    "necessity_scan",
    "plane_wave_data",
    "random_smooth_data",
    "region_membership",
    "resonance_survey",
    "semiclassical_experiment",
    "sigma1",
    "sigma2",
    "smooth_reference_data",
    "sobolev_norm",
    "solve",
]
