"""Convex-duality engine: recover kappa(E) = max_{s>0} gamma(s) - s E.

gamma is concave (it is an infimum of affine functions of s), so the
objective is unimodal in s and a bracketing scan plus golden-section search
finds the maximiser to relative tolerance. gamma itself may be supplied as a
closed form or built as the ground-state energy of a tridiagonal operator
family with adaptive truncation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BoundaryHitError, ConvergenceError, InvalidCurveError, InvalidInputError
from .spectra import TridiagonalOperator, solve_spectrum

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
S_REL_TOL = 1e-10
DEFAULT_DOMAIN = (1e-6, 1e6)
MAX_EXPANSIONS = 3
SCAN_PER_DECADE = 4


@dataclass(frozen=True)
class GammaCurve:
    """A concave curve s -> gamma(s) on a positive domain."""

    evaluator: Callable[[float], float]
    domain: tuple[float, float] = DEFAULT_DOMAIN

    def __call__(self, s: float) -> float:
        return float(self.evaluator(s))


@dataclass(frozen=True)
class KappaResult:
    E: float
    kappa: float
    s_E: float


def _golden_max(f, lo: float, hi: float) -> tuple[float, float]:
    # maximise a unimodal f on [lo, hi]; work in log s so the relative
    # tolerance is uniform across the many decades the bracket can span
    a, b = math.log(lo), math.log(hi)
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = f(math.exp(c)), f(math.exp(d))
    while (b - a) > S_REL_TOL:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = f(math.exp(c))
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = f(math.exp(d))
    s = math.exp(0.5 * (a + b))
    return s, f(s)


def _scan_bracket(f, lo: float, hi: float) -> tuple[int, np.ndarray, np.ndarray]:
    decades = math.log10(hi / lo)
    n = max(int(round(decades * SCAN_PER_DECADE)), 8) + 1
    grid = np.exp(np.linspace(math.log(lo), math.log(hi), n))
    vals = np.array([f(s) for s in grid])
    return int(np.argmax(vals)), grid, vals


def maximize_unimodal(f, domain=DEFAULT_DOMAIN, concavity_check=None):
    """Bracket a unimodal maximum on a geometric grid, then golden-section.

    If the scan puts the maximum on a bracket edge, the bracket is widened
    geometrically (up to MAX_EXPANSIONS times) before giving up.
    """
    lo, hi = domain
    if not (0 < lo < hi):
        raise InvalidInputError("domain must satisfy 0 < lo < hi")
    for _ in range(MAX_EXPANSIONS + 1):
        i, grid, vals = _scan_bracket(f, lo, hi)
        if concavity_check is not None:
            concavity_check(grid, vals)
        if i == 0:
            lo, hi = lo / 100.0, grid[min(2, len(grid) - 1)]
            continue
        if i == len(grid) - 1:
            lo, hi = grid[max(len(grid) - 3, 0)], hi * 100.0
            continue
        return _golden_max(f, grid[i - 1], grid[i + 1])
    raise BoundaryHitError(
        f"maximiser stayed on the bracket boundary after {MAX_EXPANSIONS} expansions"
    )


def _check_concave(grid: np.ndarray, vals: np.ndarray) -> None:
    # midpoint test in s on consecutive triples of the scan grid; the chord
    # weight accounts for the geometric (non-uniform in s) spacing
    for i in range(1, len(grid) - 1):
        s0, s1, s2 = grid[i - 1], grid[i], grid[i + 1]
        w = (s1 - s0) / (s2 - s0)
        chord = (1 - w) * vals[i - 1] + w * vals[i + 1]
        if vals[i] < chord - 1e-9:
            raise InvalidCurveError(
                f"concavity violated near s={s1:.3e}: value {vals[i]:.12e} < chord {chord:.12e}"
            )


def kappa_from_gamma(gamma: GammaCurve, E: float, check_concavity: bool = False) -> KappaResult:
    """kappa(E) and its multiplier s_E from the dual curve gamma."""
    if E < 0 or not np.isfinite(E):
        raise InvalidInputError("E must be a finite nonnegative real")
    objective = lambda s: gamma(s) - s * E
    check = _check_concave if check_concavity else None
    s_E, kappa = maximize_unimodal(objective, gamma.domain, concavity_check=check)
    return KappaResult(float(E), float(kappa), float(s_E))


def gamma_from_operator(
    builder: Callable[[float], TridiagonalOperator],
    domain: tuple[float, float] = DEFAULT_DOMAIN,
    start: int = 16,
) -> GammaCurve:
    """gamma(s) = smallest eigenvalue of builder(s), truncation-converged.

    The builder should return a generously sized operator; leading principal
    truncations of doubling size are solved until the ground eigenvalue
    stabilises below 1e-10.
    """

    def evaluator(s: float) -> float:
        op = builder(s)
        n = min(start, op.dim)
        prev = None
        while True:
            sub = TridiagonalOperator(op.diagonal[:n], op.offdiagonal[: n - 1] if n > 1 else op.offdiagonal[:0])
            val = float(solve_spectrum(sub, 1).eigenvalues[0])
            if prev is not None and abs(val - prev) < 1e-10:
                return val
            if n == op.dim:
                if prev is None or abs(val - prev) < 1e-10:
                    return val
                raise ConvergenceError(
                    "ground eigenvalue did not stabilise within the operator built"
                )
            prev = val
            n = min(2 * n, op.dim)

    return GammaCurve(evaluator, domain)
