"""Shift estimation on the real line, the integers, and the Heisenberg pair.

These are the cases with fully closed-form answers; optimal continuous
states are returned as samples on a uniform grid wide enough that the
truncated Gaussian tails fall below 1e-14.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import UnboundedRiskError
from .states import CONTINUOUS_GRID_SIZE, EnergyBudget, MinErrorReport, WaveFunction, normalized


def _as_budget(E) -> EnergyBudget:
    return E if isinstance(E, EnergyBudget) else EnergyBudget(float(E))


def _grid(lo: float, hi: float) -> tuple[np.ndarray, float]:
    grid = np.linspace(lo, hi, CONTINUOUS_GRID_SIZE)
    return grid, float(grid[1] - grid[0])


def real_line_kappa(E) -> MinErrorReport:
    """Minimum mean-square shift error under <lambda^2> <= E: 1/(4E).

    Attained by the centered Gaussian with amplitude E^{-1/4} exp(-l^2/(4E))
    (density normalised against d lambda / sqrt(2 pi))."""
    b = _as_budget(E)
    if b.E == 0:
        raise UnboundedRiskError("no finite risk at zero energy on the line")
    grid, dl = _grid(-8.0 * math.sqrt(b.E), 8.0 * math.sqrt(b.E))
    amp = b.E ** -0.25 * np.exp(-grid ** 2 / (4.0 * b.E))
    weights = np.full_like(grid, dl / math.sqrt(2.0 * math.pi))
    state = normalized(grid, amp, weights)
    return MinErrorReport(
        group="real_line",
        constraint=f"second moment <= {b.E}",
        kappa=1.0 / (4.0 * b.E),
        method="closed_form",
        s_E=None,
        optimal_state=state,
    )


def real_line_positive_kappa(E) -> MinErrorReport:
    """Positive-representation variant: minimum 9/(4E).

    The optimiser vanishes at the origin: sqrt(2) (3/E)^{3/4} l exp(-3l^2/(4E))
    supported on l >= 0."""
    b = _as_budget(E)
    if b.E == 0:
        raise UnboundedRiskError("no finite risk at zero energy on the half line")
    grid, dl = _grid(0.0, 8.0 * math.sqrt(b.E))
    amp = math.sqrt(2.0) * (3.0 / b.E) ** 0.75 * grid * np.exp(-3.0 * grid ** 2 / (4.0 * b.E))
    weights = np.full_like(grid, dl / math.sqrt(2.0 * math.pi))
    state = normalized(grid, amp, weights)
    return MinErrorReport(
        group="real_line_positive",
        constraint=f"second moment <= {b.E}",
        kappa=9.0 / (4.0 * b.E),
        method="closed_form",
        optimal_state=state,
    )


def real_line_interval_min(L: float) -> MinErrorReport:
    """Support restricted to [-L, L]: minimum pi^2/(4 L^2).

    The optimal state is the half-sine arch on the interval; its second
    moment is (1/3 - 2/pi^2) L^2, carried in the report notes."""
    if L <= 0 or not np.isfinite(L):
        raise UnboundedRiskError("interval half-width must be positive")
    grid, dl = _grid(-L, L)
    amp = np.sin(np.pi * (1.0 + grid / L) / 2.0)
    weights = np.full_like(grid, dl / math.sqrt(2.0 * math.pi))
    state = normalized(grid, amp, weights)
    energy = (1.0 / 3.0 - 2.0 / math.pi ** 2) * L ** 2
    return MinErrorReport(
        group="real_line_interval",
        constraint=f"support in [-{L}, {L}]",
        kappa=math.pi ** 2 / (4.0 * L ** 2),
        method="closed_form",
        optimal_state=state,
        notes=f"state_energy={energy!r}",
    )


def integers_min(half_width: int = 64) -> MinErrorReport:
    """Integer shifts are perfectly distinguishable: zero error, flat state.

    The returned state is a flat window of the given half-width (any flat
    limit works; the window is for finite reporting only)."""
    labels = np.arange(-half_width, half_width + 1, dtype=float)
    amp = np.ones_like(labels)
    weights = np.ones_like(labels)
    state = normalized(labels, amp, weights)
    return MinErrorReport(
        group="integers",
        constraint="none",
        kappa=0.0,
        method="closed_form",
        optimal_state=state,
    )


def heisenberg_kappa(E) -> MinErrorReport:
    """Two-parameter phase-space shift under <Q^2+P^2> <= E: minimum 1/(2E).

    The optimal estimator's outcome is Gaussian with variance 1/(8E) in each
    of the two coordinates; composing independent optimal systems is again
    optimal at the summed budget (the risk is additive and 1/(2E) is convex,
    so splitting the budget never helps)."""
    b = _as_budget(E)
    if b.E == 0:
        raise UnboundedRiskError("no finite risk at zero energy")
    return MinErrorReport(
        group="heisenberg",
        constraint=f"<Q^2+P^2> <= {b.E}",
        kappa=1.0 / (2.0 * b.E),
        method="closed_form",
        notes=f"outcome_variance_per_coordinate={1.0 / (8.0 * b.E)!r}",
    )
