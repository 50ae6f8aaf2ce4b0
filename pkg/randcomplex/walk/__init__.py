# flake8: noqa
"""
Face Walk SubPackage API
"""

from .core import (
    WalkKernel, StationaryDist, WalkStatistics, face_adjacency,
    transition_kernel, stationary, simulate
)
from .conductance import (
    ConductanceResult, flow_Q, pi_set, phi_set, exit_ratio,
    conductance_exact, conductance_estimate
)
from .shadows import (
    ShadowProfile, coface_profile, tight_components, generalized_binomial,
    kruskal_katona_bound, interior_fraction_bound
)
