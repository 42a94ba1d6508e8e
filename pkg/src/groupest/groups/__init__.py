"""Per-group minimum-error calculators and optimal input states."""

from .states import CONTINUOUS_GRID_SIZE, EnergyBudget, MinErrorReport, WaveFunction, normalized
from .real_line import (
    heisenberg_kappa,
    integers_min,
    real_line_interval_min,
    real_line_kappa,
    real_line_positive_kappa,
)
from .u1 import (
    u1_finite_cut_min,
    u1_kappa,
    u1_kappa_large_E,
    u1_kappa_small_E,
    u1_uncertainty_maxP,
    u1_uncertainty_min,
)
from .su2 import (
    su2_character,
    su2_finite_cut_min,
    su2_kappa,
    su2_kappa_large_E,
    su2_kappa_small_E,
    su2_uncertainty_maxP,
    su2_uncertainty_min,
)
from .so3 import (
    so3_finite_cut_min,
    so3_kappa,
    so3_kappa_large_E,
    so3_kappa_small_expansions,
    so3_tensor_qubit_asymptote,
)
from .finite import compact_cut_min, finite_group_min_error

__all__ = [
    "CONTINUOUS_GRID_SIZE",
    "EnergyBudget",
    "MinErrorReport",
    "WaveFunction",
    "normalized",
    "heisenberg_kappa",
    "integers_min",
    "real_line_interval_min",
    "real_line_kappa",
    "real_line_positive_kappa",
    "u1_finite_cut_min",
    "u1_kappa",
    "u1_kappa_large_E",
    "u1_kappa_small_E",
    "u1_uncertainty_maxP",
    "u1_uncertainty_min",
    "su2_character",
    "su2_finite_cut_min",
    "su2_kappa",
    "su2_kappa_large_E",
    "su2_kappa_small_E",
    "su2_uncertainty_maxP",
    "su2_uncertainty_min",
    "so3_finite_cut_min",
    "so3_kappa",
    "so3_kappa_large_E",
    "so3_kappa_small_expansions",
    "so3_tensor_qubit_asymptote",
    "compact_cut_min",
    "finite_group_min_error",
]
