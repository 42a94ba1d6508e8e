"""Protocol configuration and report containers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..errors import InvalidInputError
from ..groups.states import WaveFunction

GROUPS = ("u1", "su2", "so3_plus", "so3_minus")

# fraction of flat-likelihood trials tolerated before the run is rejected
FLAT_TRIAL_CAP = 1e-3

# fixed search constants, exposed for reproducibility
MLE_GRID_U1 = 1024
MLE_BISECTIONS_U1 = 30
MLE_STEP_TOL_GROUP = 1e-8
SAMPLER_GRID = 2 ** 14


def u1_shift(labels: np.ndarray, p: np.ndarray) -> float:
    """The energy-minimising label shift lambda = -sum k p_k."""
    return -float(np.sum(labels * p))


def check_u1_evenness(state: WaveFunction) -> bool:
    """The phase protocol needs an outcome law even around the truth.

    That holds when the centred weight distribution is symmetric and the
    shift is 0 or -1/2 (an integer or half-integer centring)."""
    p = state.probabilities()
    lam = u1_shift(state.labels, p)
    centred = state.labels + lam
    if min(abs(lam - 0.0), abs(lam + 0.5)) > 1e-9:
        return False
    # symmetry of masses under negation of the centred label
    masses = {}
    for c, pk in zip(np.round(centred * 2).astype(int), p):
        masses[c] = masses.get(c, 0.0) + pk
    return all(abs(pk - masses.get(-c, 0.0)) < 1e-9 for c, pk in masses.items())


def check_su2_parity(state: WaveFunction) -> bool:
    """Identifiability needs weights of both parities with positive mass."""
    k = np.round(state.labels * 2).astype(int)
    p = state.probabilities()
    return bool(np.any(p[k % 2 == 0] > 1e-12) and np.any(p[k % 2 == 1] > 1e-12))


@dataclass(frozen=True)
class ProtocolConfig:
    group: str
    state: WaveFunction
    true_parameter: np.ndarray  # [theta] for u1, rotation vector for the rest
    samples_per_trial: int
    trials: int
    seed: int
    evenness_checked: bool = field(init=False, default=False)

    def __post_init__(self):
        if self.group not in GROUPS:
            raise InvalidInputError(f"group must be one of {GROUPS}")
        if self.samples_per_trial < 1 or self.trials < 1:
            raise InvalidInputError("samples_per_trial and trials must be >= 1")
        theta = np.atleast_1d(np.asarray(self.true_parameter, dtype=float))
        object.__setattr__(self, "true_parameter", theta)
        if self.group == "u1":
            if theta.size != 1:
                raise InvalidInputError("u1 needs a single angle")
            if not check_u1_evenness(self.state):
                raise InvalidInputError(
                    "state violates the evenness condition for the phase protocol"
                )
        else:
            if theta.size != 3:
                raise InvalidInputError("rotation groups need an axis-angle triple")
            if self.group == "su2" and not check_su2_parity(self.state):
                raise InvalidInputError(
                    "su2 estimation needs both parities populated"
                )
        object.__setattr__(self, "evenness_checked", True)


@dataclass(frozen=True)
class ProtocolReport:
    group: str
    risk_estimate: float
    std_error: float
    fisher_numeric: np.ndarray  # scalar for u1, 3x3 for the rest
    fisher_predicted: np.ndarray
    samples_per_trial: int
    trials: int
    excluded_flat: int = 0
