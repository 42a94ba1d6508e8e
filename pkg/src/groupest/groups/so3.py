"""Rotation estimation on SO(3), in both factor systems.

The [+1] factor uses the true (integer-spin) representations, the [-1]
factor the projective half-integer-spin sector. The risk is 1 - cos(theta)
for a relative rotation angle theta. Dimension weights are d = 2j+1.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import InfeasibleEnergyError, InvalidInputError
from ..spectra import odd_sector_spectrum, path_matrix_spectrum
from ._angular import SO3_MINUS_MODEL, SO3_PLUS_MODEL
from .states import MinErrorReport, WaveFunction, normalized

SECTORS = ("integer", "half_integer")
FACTORS = ("plus", "minus")
MINUS_MIN_ENERGY = 0.75  # spin 1/2 has j(j+1) = 3/4


def so3_finite_cut_min(n: int, sector: str) -> MinErrorReport:
    """Best rotation estimation with spins restricted to a finite ladder.

    integer sector (spins 0..n): 1 - cos(2 pi/(2n+3)); the optimal block
    weights come from the path matrix with a -1 pinned on its first node
    (the spin-0 block couples to itself through the tensor square).
    half-integer sector (spins 1/2..n+1/2): 1 - cos(pi/(n+2)), plain
    sine-profile path eigenvector.
    """
    if n < 0:
        raise InvalidInputError("cut size n must be >= 0")
    if sector == "integer":
        kappa = 1.0 - math.cos(2.0 * math.pi / (2 * n + 3))
        spec = odd_sector_spectrum(n + 1)
        beta = np.abs(spec.eigenvectors[-1])  # top eigenvector
        j = np.arange(n + 1, dtype=float)
    elif sector == "half_integer":
        kappa = 1.0 - math.cos(math.pi / (n + 2))
        spec = path_matrix_spectrum(n + 1)
        beta = np.abs(spec.eigenvectors[-1])
        j = np.arange(n + 1, dtype=float) + 0.5
    else:
        raise InvalidInputError(f"sector must be one of {SECTORS}")
    dims = 2.0 * j + 1.0
    state = normalized(j, beta / np.sqrt(dims), dims)
    return MinErrorReport(
        group="so3",
        constraint=f"{sector} spins, ladder size {n + 1}",
        kappa=kappa,
        method="finite_cut",
        optimal_state=state,
    )


def so3_tensor_qubit_asymptote(n: int) -> float:
    """n^2 times the best risk achievable inside n tensored qubits.

    The qubit power decomposes into spins up to n/2; even n admits the
    integer ladder with floor(n/2) steps, odd n the half-integer ladder.
    The value converges to 2 pi^2.
    """
    if n < 2:
        raise InvalidInputError("need at least two qubits")
    m = n // 2
    if n % 2 == 0:
        cut = so3_finite_cut_min(m, "integer")
    else:
        cut = so3_finite_cut_min(m, "half_integer")
    return n ** 2 * cut.kappa


def _state_from_beta(beta: np.ndarray, factor: str) -> WaveFunction:
    m = np.arange(beta.size, dtype=float)
    j = m if factor == "plus" else m + 0.5
    dims = 2.0 * j + 1.0
    return normalized(j, beta / np.sqrt(dims), dims)


def so3_kappa(E: float, factor: str = "plus") -> MinErrorReport:
    """Minimum risk under sum beta_j^2 j(j+1) <= E in the chosen factor."""
    if factor not in FACTORS:
        raise InvalidInputError(f"factor must be one of {FACTORS}")
    if E < 0:
        raise InvalidInputError("E must be >= 0")
    if factor == "minus" and E < MINUS_MIN_ENERGY:
        raise InfeasibleEnergyError(
            f"the projective sector needs E >= 3/4, got {E}"
        )
    if factor == "plus" and E == 0:
        base = so3_finite_cut_min(0, "integer")
        return MinErrorReport("so3", "energy <= 0 [+1]", 1.5, "closed_form",
                              optimal_state=base.optimal_state)
    if factor == "minus" and E == MINUS_MIN_ENERGY:
        base = so3_finite_cut_min(0, "half_integer")
        return MinErrorReport("so3", "energy <= 3/4 [-1]", 1.0, "closed_form",
                              optimal_state=base.optimal_state)
    model = SO3_PLUS_MODEL if factor == "plus" else SO3_MINUS_MODEL
    res = model.kappa(E)
    state = _state_from_beta(model.ground_vector(res.s_E), factor)
    return MinErrorReport(
        group="so3",
        constraint=f"energy <= {E} [{'+1' if factor == 'plus' else '-1'}]",
        kappa=res.kappa,
        method="legendre_mathieu",
        s_E=res.s_E,
        optimal_state=state,
    )


def so3_kappa_large_E(E: float) -> float:
    """Shared second-order large-E curve 9/(8E) - 81/(128 E^2) (both factors)."""
    return 9.0 / (8.0 * E) - 81.0 / (128.0 * E ** 2)


def so3_kappa_small_expansions(E: float, factor: str = "plus") -> float:
    """Boundary expansions: 3/2 - sqrt(E/2) - E/4 ([+1], small E) and
    1 - eta^{1/2}/sqrt(3) + 5 eta^{3/2}/(48 sqrt(3)) ([-1], eta = E - 3/4)."""
    if factor == "plus":
        return 1.5 - math.sqrt(E / 2.0) - E / 4.0
    if factor == "minus":
        eta = E - MINUS_MIN_ENERGY
        if eta < 0:
            raise InfeasibleEnergyError("the projective sector needs E >= 3/4")
        return 1.0 - math.sqrt(eta) / math.sqrt(3.0) + 5.0 * eta ** 1.5 / (48.0 * math.sqrt(3.0))
    raise InvalidInputError(f"factor must be one of {FACTORS}")
