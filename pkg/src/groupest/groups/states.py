"""Shared data types for the per-group calculators.

Measure conventions used throughout (fixed once to avoid silent factor
errors between the differently normalised sources of each formula):

===========  =======================  ===================================
group        labels                   measure_weights / norm convention
===========  =======================  ===================================
real line    uniform lambda grid      grid spacing (trapezoid weights);
                                      density |phi|^2 integrates to 1
integers     integer k                counting measure, weight 1
U(1) dual    integer k                counting measure, weight 1;
                                      amplitudes sqrt(p_k)
SU(2)        half-integer k/2         d = k+1; amplitudes c with
                                      sum d c^2 = 1 (beta = sqrt(d) c)
SO(3) [+1]   integer j                d = 2j+1; same weighted norm
SO(3) [-1]   half-integer j           d = 2j+1; same weighted norm
Heisenberg   uniform lambda grid      as real line (per coordinate)
===========  =======================  ===================================

Energy functionals: k^2 for U(1) (optionally shifted), (k/2)(k/2+1) resp.
j(j+1) for SU(2)/SO(3), quadrature of lambda^2 on the line, Q^2+P^2 for the
Heisenberg pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..errors import InvalidInputError

NORM_TOL = 1e-9

# continuous states are sampled on this many uniformly spaced points
CONTINUOUS_GRID_SIZE = 2 ** 12


@dataclass(frozen=True)
class WaveFunction:
    """Amplitudes over dual-group labels with a weighted norm convention.

    `labels` are weights/highest weights (or a lambda grid for continuous
    groups), `amplitudes` the real nonnegative coefficients, and
    `measure_weights` the per-label weights w with sum w * amplitude^2 = 1.
    """

    labels: np.ndarray
    amplitudes: np.ndarray
    measure_weights: np.ndarray

    def __post_init__(self):
        lab = np.asarray(self.labels, dtype=float)
        amp = np.asarray(self.amplitudes, dtype=float)
        w = np.asarray(self.measure_weights, dtype=float)
        object.__setattr__(self, "labels", lab)
        object.__setattr__(self, "amplitudes", amp)
        object.__setattr__(self, "measure_weights", w)
        if not (lab.shape == amp.shape == w.shape):
            raise InvalidInputError("labels, amplitudes, weights must align")
        if not np.all(np.isfinite(amp)):
            raise InvalidInputError("amplitudes must be finite")
        norm = self.norm_squared()
        if abs(norm - 1.0) > NORM_TOL:
            raise InvalidInputError(f"weighted squared norm {norm} is not 1")

    def norm_squared(self) -> float:
        return float(np.sum(self.measure_weights * self.amplitudes ** 2))

    def probabilities(self) -> np.ndarray:
        """Per-label probability mass w * amplitude^2."""
        return self.measure_weights * self.amplitudes ** 2

    def energy(self, label_energy) -> float:
        return float(np.sum(self.probabilities() * label_energy(self.labels)))


@dataclass(frozen=True)
class EnergyBudget:
    E: float

    def __post_init__(self):
        if not np.isfinite(self.E) or self.E < 0:
            raise InvalidInputError("energy budget must be finite and >= 0")


@dataclass(frozen=True)
class MinErrorReport:
    group: str
    constraint: str
    kappa: float
    method: str  # closed_form | legendre_mathieu | finite_cut | expansion
    s_E: Optional[float] = None
    optimal_state: Optional[WaveFunction] = field(default=None, repr=False)
    notes: str = ""


def normalized(labels, amplitudes, weights) -> WaveFunction:
    amp = np.asarray(amplitudes, dtype=float)
    w = np.asarray(weights, dtype=float)
    n = np.sqrt(np.sum(w * amp ** 2))
    if n <= 0 or not np.isfinite(n):
        raise InvalidInputError("cannot normalise a null state")
    return WaveFunction(np.asarray(labels, dtype=float), amp / n, w)
