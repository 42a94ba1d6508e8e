"""Phase estimation on U(1): finite cuts, energy-constrained curves,
and the angular-spread trade-off values.

The risk throughout is 1 - cos of the estimation error. Dual labels are the
integers k (counting measure), amplitudes sqrt(p_k).
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import InvalidInputError
from ._angular import U1_MODEL
from .states import MinErrorReport, WaveFunction, normalized


def u1_finite_cut_min(n: int) -> MinErrorReport:
    """Best phase estimation with weights restricted to [-n, n].

    The minimum risk is 1 - cos(pi/(2n+2)), attained by the sine-profile
    amplitudes sqrt(p_k) ~ sin(pi (k+n+1)/(2n+2)).
    """
    if n < 0:
        raise InvalidInputError("cut size n must be >= 0")
    labels = np.arange(-n, n + 1, dtype=float)
    amp = np.sin(np.pi * (labels + n + 1) / (2 * n + 2))
    state = normalized(labels, amp, np.ones_like(labels))
    return MinErrorReport(
        group="u1",
        constraint=f"weights in [-{n}, {n}]",
        kappa=1.0 - math.cos(math.pi / (2 * n + 2)),
        method="finite_cut",
        optimal_state=state,
    )


def _state_from_vector(vec: np.ndarray) -> WaveFunction:
    # even-sector vector: index 0 is the k=0 coefficient with sqrt(2) weight,
    # index m>0 carries both k = +m and k = -m with equal mass
    m_max = vec.size - 1
    labels = np.arange(-m_max, m_max + 1, dtype=float)
    p = np.empty_like(labels)
    p[m_max] = vec[0] ** 2
    for m in range(1, m_max + 1):
        p[m_max + m] = p[m_max - m] = vec[m] ** 2 / 2.0
    return normalized(labels, np.sqrt(p), np.ones_like(labels))


def u1_kappa(E: float) -> MinErrorReport:
    """Minimum risk under sum k^2 p_k <= E, via the dual angular problem."""
    if E < 0:
        raise InvalidInputError("E must be >= 0")
    if E == 0:
        base = u1_finite_cut_min(0)
        return MinErrorReport("u1", "energy <= 0", 1.0, "closed_form",
                              optimal_state=base.optimal_state)
    res = U1_MODEL.kappa(E)
    state = _state_from_vector(U1_MODEL.ground_vector(res.s_E))
    return MinErrorReport(
        group="u1",
        constraint=f"energy <= {E}",
        kappa=res.kappa,
        method="legendre_mathieu",
        s_E=res.s_E,
        optimal_state=state,
    )


def u1_kappa_large_E(E: float) -> float:
    """Second-order large-E curve 1/(8E) - 1/(128 E^2)."""
    return 1.0 / (8.0 * E) - 1.0 / (128.0 * E ** 2)


def u1_kappa_small_E(E: float) -> float:
    """Second-order small-E curve 1 - sqrt(2E) + 7 sqrt(2)/16 E^{3/2}."""
    return 1.0 - math.sqrt(2.0 * E) + 7.0 * math.sqrt(2.0) / 16.0 * E ** 1.5


def u1_uncertainty_min(E: float) -> float:
    """Minimum angular spread 1 - <cos>^2 - <sin>^2 given momentum variance <= E.

    Equals 1 - (1 - u1_kappa(E))^2; computed by direct maximisation over the
    multiplier so the identity remains a cross-check rather than an input.
    """
    if E < 0:
        raise InvalidInputError("E must be >= 0")
    if E == 0:
        return 1.0
    return U1_MODEL.spread_min(E)


def u1_uncertainty_maxP(E: float) -> float:
    """Minimum momentum variance given angular support of energy E: a step
    function sin^2(pi/(2 floor(E) + 2))."""
    if E < 0:
        raise InvalidInputError("E must be >= 0")
    return math.sin(math.pi / (2 * math.floor(E) + 2)) ** 2
