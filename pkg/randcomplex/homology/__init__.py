# flake8: noqa
"""
Homology SubPackage API
"""

from .operators import (
    OperatorMatrix, Cochain, face_basis, boundary_matrix, coboundary_matrix,
    upper_laplacian, lower_laplacian, hodge_laplacian
)
from .spectral import (
    SpectralReport, cycle_space_basis, cycle_dimension, spectral_gap,
    harmonic_dimension, random_cycle, adjacency_form_bound
)
from .garland import GarlandResiduals, garland_check
