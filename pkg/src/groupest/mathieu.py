"""Characteristic values and periodic eigenfunctions of the angular equation

    phi''(theta) + (a - 2 q cos(2 theta)) phi(theta) = 0.

Four symmetry sectors are covered, tagged by the lowest characteristic value
living in each of them:

    A0 : even, pi-periodic        (cosine series in 2m theta)      -> a_0(q)
    A1 : even, pi-antiperiodic    (cosine series in (2m+1) theta)  -> a_1(q)
    B1 : odd,  pi-antiperiodic    (sine series in (2m+1) theta)    -> b_1(q)
    B2 : odd,  pi-periodic        (sine series in (2m+2) theta)    -> b_2(q)

Each sector's Fourier three-term recurrence is a symmetric tridiagonal matrix,
so the characteristic value is the smallest eigenvalue of an adaptive
truncation, solved by the spectra module. Closed-form small-q and large-q
expansions are provided as independent cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConvergenceError, InvalidInputError
from .spectra import SpectrumResult, TridiagonalOperator, solve_spectrum

CONVERGENCE_TOL = 1e-10
MAX_TRUNCATION = 2 ** 16


class MathieuOrder(Enum):
    A0 = "a0"
    A1 = "a1"
    B1 = "b1"
    B2 = "b2"


@dataclass(frozen=True)
class MathieuValue:
    order: MathieuOrder
    q: float
    value: float
    truncation: int


@dataclass(frozen=True)
class MathieuFunctionSample:
    """An eigenfunction sampled on a grid, mean-square 1/2 over one period."""

    order: MathieuOrder
    q: float
    grid: np.ndarray
    values: np.ndarray
    coefficients: np.ndarray


def sector_operator(order: MathieuOrder, q: float, n: int) -> TridiagonalOperator:
    """The truncated Fourier-recurrence matrix of a symmetry sector.

    A0: diag (2m)^2 with a sqrt(2)*q first coupling (the constant Fourier
    mode carries double weight); A1/B1: diag (2m+1)^2 with +q/-q folded onto
    the first entry; B2: diag (2m+2)^2. All other couplings are q.
    """
    m = np.arange(n, dtype=float)
    if order is MathieuOrder.A0:
        diag = (2 * m) ** 2
        off = np.full(n - 1, q)
        if n > 1:
            off[0] = math.sqrt(2.0) * q
    elif order is MathieuOrder.B2:
        diag = (2 * m + 2) ** 2
        off = np.full(n - 1, q)
    elif order is MathieuOrder.A1:
        diag = (2 * m + 1) ** 2
        diag[0] += q
        off = np.full(n - 1, q)
    elif order is MathieuOrder.B1:
        diag = (2 * m + 1) ** 2
        diag[0] -= q
        off = np.full(n - 1, q)
    else:  # pragma: no cover
        raise InvalidInputError(f"unknown order {order}")
    return TridiagonalOperator(diag, off)


def _ground_state(order: MathieuOrder, q: float) -> tuple[float, np.ndarray, int]:
    if not np.isfinite(q):
        raise InvalidInputError("q must be finite")
    if abs(q) > 1e6:
        raise InvalidInputError("|q| must not exceed 1e6")
    n = max(16, math.ceil(2.0 * math.sqrt(abs(q))) + 8)
    prev = None
    while n <= MAX_TRUNCATION:
        res = solve_spectrum(sector_operator(order, q, n), 1)
        val = float(res.eigenvalues[0])
        if prev is not None and abs(val - prev) < CONVERGENCE_TOL:
            return val, res.eigenvectors[0], n
        prev = val
        n *= 2
    raise ConvergenceError(
        f"characteristic value did not stabilise below N={MAX_TRUNCATION}"
    )


def characteristic_value(order: MathieuOrder, q: float) -> MathieuValue:
    """Lowest characteristic value of the sector at parameter q."""
    val, _, n = _ground_state(order, q)
    return MathieuValue(order, float(q), val, n)


def expansion_small_q(order: MathieuOrder, q: float) -> float:
    """Power-series values around q = 0 (quartic order)."""
    if order is MathieuOrder.A0:
        return -q ** 2 / 2 + 7 * q ** 4 / 128
    if order is MathieuOrder.A1:
        return 1 + q - q ** 2 / 8 - q ** 3 / 64 - q ** 4 / 1536
    if order is MathieuOrder.B1:
        # sector symmetry: b_1(q) = a_1(-q)
        return expansion_small_q(MathieuOrder.A1, -q)
    if order is MathieuOrder.B2:
        return 4 - q ** 2 / 12 + 5 * q ** 4 / 13824
    raise InvalidInputError(f"unknown order {order}")


def expansion_large_q(order: MathieuOrder, h: float) -> float:
    """Asymptotic values for q = h^2 -> +infinity.

    The A1 and B2 curves merge in this regime and share one expansion.
    """
    if h <= 0:
        raise InvalidInputError("h must be positive")
    if order is MathieuOrder.A0:
        return -2 * h ** 2 + 2 * h - 0.25 - 1 / (32 * h) - 3 / (256 * h ** 2)
    if order in (MathieuOrder.A1, MathieuOrder.B2):
        return -2 * h ** 2 + 6 * h - 1.25 - 9 / (32 * h) - 45 / (256 * h ** 2)
    raise InvalidInputError(f"no large-q expansion implemented for {order}")


def _frequencies(order: MathieuOrder, n: int) -> np.ndarray:
    m = np.arange(n)
    if order is MathieuOrder.A0:
        return 2.0 * m
    if order is MathieuOrder.B2:
        return 2.0 * m + 2
    return 2.0 * m + 1  # A1 and B1


def reconstruct(order: MathieuOrder, coeffs: np.ndarray, grid: np.ndarray) -> np.ndarray:
    """Evaluate the sector eigenfunction from its recurrence eigenvector.

    The eigenvector components are the Fourier coefficients, except that the
    A0 constant term is stored with a sqrt(2) weight (so a unit eigenvector
    yields mean-square 1/2 over the period in every sector).
    """
    freqs = _frequencies(order, coeffs.size)
    grid = np.asarray(grid, dtype=float)
    if order in (MathieuOrder.A0, MathieuOrder.A1):
        basis = np.cos(np.outer(grid, freqs))
    else:
        basis = np.sin(np.outer(grid, freqs))
    c = coeffs.copy()
    if order is MathieuOrder.A0:
        c[0] /= math.sqrt(2.0)
    return basis @ c


def mathieu_function(order: MathieuOrder, q: float, grid: np.ndarray) -> MathieuFunctionSample:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2 or np.any(np.diff(grid) <= 0):
        raise InvalidInputError("grid must be strictly increasing")
    _, vec, _ = _ground_state(order, q)
    # sign: first Fourier coefficient positive (continuous q -> 0 limit)
    if vec[0] < 0:
        vec = -vec
    # drop the trailing tail of negligible coefficients (keep indices aligned)
    keep = np.flatnonzero(np.abs(vec) > 1e-12 * np.max(np.abs(vec)))
    if keep.size:
        vec = vec[: keep[-1] + 1]
    values = reconstruct(order, vec, grid)
    return MathieuFunctionSample(order, float(q), grid, values, vec)
