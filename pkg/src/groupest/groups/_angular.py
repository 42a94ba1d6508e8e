"""Shared machinery for the energy-constrained compact-group curves.

Each curve is kappa(E) = max_{s>0} gamma(s) - s*(E + shift) with
gamma(s) = s * charval(order, c/s) / divisor + 1 for a sector-specific
characteristic value. The optimal input state is read off the ground
eigenvector of the recurrence matrix at q = c/s_E: flipping the sign of q
negates the off-diagonals (and swaps the A1/B1 sectors, whose lowest values
are mirror images), which only flips alternating eigenvector signs, so the
absolute components at +q equal those of the physical negative-q ground
state in the matched sector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..legendre import GammaCurve, KappaResult, kappa_from_gamma, maximize_unimodal
from ..mathieu import MathieuOrder, _ground_state, characteristic_value


@dataclass(frozen=True)
class AngularModel:
    order: MathieuOrder
    coupling: float  # c in q = c/s
    divisor: float  # gamma(s) = s*charval/divisor + 1
    energy_shift: float  # constraint enters as E + shift

    def domain(self) -> tuple[float, float]:
        # keep q = c/s within the characteristic-value precondition |q| <= 1e6
        return (max(1e-6, self.coupling / 1e6), 1e6)

    def gamma(self) -> GammaCurve:
        def ev(s: float) -> float:
            a = characteristic_value(self.order, self.coupling / s).value
            return s * a / self.divisor + 1.0

        return GammaCurve(ev, self.domain())

    def kappa(self, E: float) -> KappaResult:
        res = kappa_from_gamma(self.gamma(), E + self.energy_shift)
        # report against the caller's E, not the shifted one
        return KappaResult(E, res.kappa, res.s_E)

    def ground_vector(self, s_E: float) -> np.ndarray:
        _, vec, _ = _ground_state(self.order, self.coupling / s_E)
        vec = np.abs(vec)  # physical components are entrywise positive
        keep = np.flatnonzero(vec > 1e-12)
        return vec[: keep[-1] + 1] if keep.size else vec

    def spread_min(self, E: float) -> float:
        """max_s 1 - (s*(E+shift) - s*charval(c/s)/divisor)^2.

        Equals 1 - (1 - kappa(E))^2; evaluated by direct maximisation so the
        identity stays an independent check."""

        def f(s: float) -> float:
            a = characteristic_value(self.order, self.coupling / s).value
            return 1.0 - (s * (E + self.energy_shift) - s * a / self.divisor) ** 2

        _, val = maximize_unimodal(f, self.domain())
        return val


U1_MODEL = AngularModel(MathieuOrder.A0, coupling=2.0, divisor=4.0, energy_shift=0.0)
SU2_MODEL = AngularModel(MathieuOrder.B2, coupling=8.0, divisor=16.0, energy_shift=0.25)
SO3_PLUS_MODEL = AngularModel(MathieuOrder.A1, coupling=2.0, divisor=4.0, energy_shift=0.25)
SO3_MINUS_MODEL = AngularModel(MathieuOrder.B2, coupling=2.0, divisor=4.0, energy_shift=0.25)
