# flake8: noqa
"""
Experiment Harness SubPackage API
"""

from .config import ExperimentConfig, MEASUREMENTS
from .experiment import (
    Report, sample_seed, measure_sample, build_report, run_experiment
)
from .export import export_report, load_report, emit_plot_data
from .cli import main
