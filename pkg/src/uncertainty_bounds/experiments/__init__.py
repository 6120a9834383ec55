from .ensemble import random_density_matrix, random_instance
from .fixtures import Fixture, fixture_fig1, fixture_fig2
from .report import BoundsReport, compare_bounds
from .sweeps import SweepResult, sweep_abs_a, sweep_theta

__all__ = [
    "BoundsReport",
    "Fixture",
    "SweepResult",
    "compare_bounds",
    "fixture_fig1",
    "fixture_fig2",
    "random_density_matrix",
    "random_instance",
    "sweep_abs_a",
    "sweep_theta",
]
