# flake8: noqa
"""
Random simplicial complexes: generation, Laplacian spectra, Cheeger
constants, face walks and concentration predictions.
"""

__version__ = '0.1.0'

#-Modules-#
from . import homology
from . import walk
from . import util
from . import harness

#-Objects-#
from ._exceptions import InstanceTooLargeError
from ._complex import (
    Complex, LinkGraph, generate, from_faces, min_codegree, link_graph,
    neighbors, save_complex, load_complex
)
from ._rank_nullspace import rank_est, nullspace, exact_rank
from ._cheeger import (
    Partition, CheegerResult, crossing_faces, partition_score,
    partition_count, cheeger_exact, cheeger_from_min_codegree
)
from ._asymptotics import (
    Prediction, lambert_w, a_eps, a_eps_bisect, entropy_H, large_eps_a,
    binomial_lower_tail, chernoff_bound, edge_probability,
    first_moment_codegree, predict
)
from .homology import (
    Cochain, boundary_matrix, coboundary_matrix, upper_laplacian,
    cycle_space_basis, spectral_gap, harmonic_dimension, garland_check,
    adjacency_form_bound
)
from .walk import (
    transition_kernel, stationary, simulate, flow_Q, phi_set,
    conductance_exact, conductance_estimate, coface_profile,
    tight_components, kruskal_katona_bound
)
from .harness import (
    ExperimentConfig, Report, run_experiment, export_report, load_report,
    emit_plot_data
)
