"""SU(2) gate estimation: characters, finite cuts, energy-constrained
curves, and the spread trade-off values.

The risk is 1 - cos(theta/2) for a relative rotation angle theta. Dual
labels are half-integers k/2 with dimension weights d = k+1; stored
amplitudes c satisfy sum d c^2 = 1 and the path-eigenvector components are
beta = sqrt(d) c.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import InvalidInputError
from ._angular import SU2_MODEL
from .states import MinErrorReport, WaveFunction, normalized


def su2_character(k: int, theta) -> np.ndarray | float:
    """Character of the spin-k/2 representation at rotation angle theta.

    chi_{k/2}(theta) = sin((k+1) theta/2) / sin(theta/2), with the removable
    singularities evaluated by the equivalent cosine sum.
    """
    if k < 0:
        raise InvalidInputError("k must be >= 0")
    theta = np.asarray(theta, dtype=float)
    # sum over l = -k/2 .. k/2 of cos(l*theta); robust at theta = 0 mod 2pi
    l = (np.arange(k + 1) - k / 2.0)[:, None]
    out = np.sum(np.cos(l * np.ravel(theta)[None, :]), axis=0)
    return float(out[0]) if theta.ndim == 0 else out.reshape(theta.shape)


def _sine_cut_state(n: int, labels: np.ndarray, dims: np.ndarray) -> WaveFunction:
    beta = np.sin((np.arange(len(labels)) + 1) * np.pi / (len(labels) + 1))
    return normalized(labels, beta / np.sqrt(dims), dims)


def su2_finite_cut_min(n: int) -> MinErrorReport:
    """Best estimation with spins restricted to k/2, k in [0, n]:
    1 - cos(pi/(n+2)), sine-profile block weights."""
    if n < 0:
        raise InvalidInputError("cut size n must be >= 0")
    k = np.arange(n + 1, dtype=float)
    state = _sine_cut_state(n, k / 2.0, k + 1.0)
    return MinErrorReport(
        group="su2",
        constraint=f"spins <= {n}/2",
        kappa=1.0 - math.cos(math.pi / (n + 2)),
        method="finite_cut",
        optimal_state=state,
    )


def _state_from_beta(beta: np.ndarray) -> WaveFunction:
    k = np.arange(beta.size, dtype=float)
    dims = k + 1.0
    return normalized(k / 2.0, beta / np.sqrt(dims), dims)


def su2_kappa(E: float) -> MinErrorReport:
    """Minimum risk under sum beta_k^2 (k/2)(k/2+1) <= E."""
    if E < 0:
        raise InvalidInputError("E must be >= 0")
    if E == 0:
        base = su2_finite_cut_min(0)
        return MinErrorReport("su2", "energy <= 0", 1.0, "closed_form",
                              optimal_state=base.optimal_state)
    res = SU2_MODEL.kappa(E)
    state = _state_from_beta(SU2_MODEL.ground_vector(res.s_E))
    return MinErrorReport(
        group="su2",
        constraint=f"energy <= {E}",
        kappa=res.kappa,
        method="legendre_mathieu",
        s_E=res.s_E,
        optimal_state=state,
    )


def su2_kappa_large_E(E: float) -> float:
    """Second-order large-E curve 9/(32E) - 7*3^3/(2^11 E^2).

    This is the expansion of the exact intermediate 9/(32E + 21/2); note the
    second term is negative (kappa approaches 9/(32E) from below).
    """
    return 9.0 / (32.0 * E) - 7.0 * 27.0 / (2048.0 * E ** 2)


def su2_kappa_small_E(E: float) -> float:
    """Second-order small-E curve 1 - (2/sqrt(3)) sqrt(E) + 5/(6 sqrt(3)) E^{3/2}."""
    return 1.0 - 2.0 / math.sqrt(3.0) * math.sqrt(E) + 5.0 / (6.0 * math.sqrt(3.0)) * E ** 1.5


def su2_uncertainty_min(E: float) -> float:
    """Spread trade-off value 1 - (min_s s(E+1/4) - s b(8/s)/16)^2.

    Equals 1 - (1 - su2_kappa(E))^2 by the same reduction as for U(1)."""
    if E < 0:
        raise InvalidInputError("E must be >= 0")
    if E == 0:
        return 1.0
    return SU2_MODEL.spread_min(E)


def su2_uncertainty_maxP(E: float) -> float:
    """Step-function trade-off sin^2(pi/(floor(2(sqrt(E^2+1/4)-1/2)) + 2))."""
    if E < 0:
        raise InvalidInputError("E must be >= 0")
    step = math.floor(2.0 * (math.sqrt(E ** 2 + 0.25) - 0.5))
    return math.sin(math.pi / (step + 2)) ** 2
