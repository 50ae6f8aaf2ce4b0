# flake8: noqa
"""
API for randcomplex Utilities
"""

from .combinatorics import (
    comb_table, face_rank, face_unrank, all_faces
)
from .random import check_random_state, mix_seed, subset_uniforms
