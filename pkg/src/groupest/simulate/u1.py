"""Phase-estimation protocol: covariant outcome sampling, maximum
likelihood, and the Fisher-information quadrature."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import GroupestError, InvalidInputError, ResolutionError
from ..groups.states import WaveFunction
from .config import (
    FLAT_TRIAL_CAP,
    MLE_BISECTIONS_U1,
    MLE_GRID_U1,
    SAMPLER_GRID,
    ProtocolConfig,
    ProtocolReport,
    u1_shift,
)
from .rng import trial_stream

_FLAT_EPS = 1e-12


class U1Sampler:
    """Inverse-CDF sampler for the covariant outcome law of a phase state.

    The outcome density at true phase theta is
    |sum_k sqrt(p_k) e^{-ik(x - theta)}|^2 / (2 pi) on (-pi, pi].
    """

    def __init__(self, state: WaveFunction, grid_size: int = SAMPLER_GRID):
        labels = np.round(state.labels).astype(int)
        if np.max(np.abs(labels - state.labels)) > 1e-9:
            raise InvalidInputError("phase states need integer labels")
        amps = np.sqrt(state.probabilities())
        keep = amps > 0
        self.k = labels[keep]
        self.a = amps[keep]
        if np.max(np.abs(self.k), initial=0) > grid_size // 2:
            raise ResolutionError("state bandwidth exceeds the sampling grid Nyquist")
        self.grid = np.linspace(-math.pi, math.pi, grid_size, endpoint=False)
        self.density = self.pdf(self.grid)
        cdf = np.cumsum(self.density)
        dx = 2.0 * math.pi / grid_size
        self.total = float(cdf[-1] * dx)
        self.cdf = cdf / cdf[-1]
        self.dx = dx

    def _f(self, x: np.ndarray) -> np.ndarray:
        return np.exp(-1j * np.multiply.outer(x, self.k)) @ self.a.astype(complex)

    def pdf(self, x) -> np.ndarray:
        return np.abs(self._f(np.asarray(x, dtype=float))) ** 2 / (2.0 * math.pi)

    def pdf_and_derivative(self, x) -> tuple[np.ndarray, np.ndarray]:
        x = np.asarray(x, dtype=float)
        phases = np.exp(-1j * np.multiply.outer(x, self.k))
        f = phases @ self.a.astype(complex)
        fp = phases @ (-1j * self.k * self.a).astype(complex)
        p = np.abs(f) ** 2 / (2.0 * math.pi)
        dp = 2.0 * np.real(np.conj(f) * fp) / (2.0 * math.pi)
        return p, dp

    def sample(self, theta: float, rng: np.random.Generator, size: int) -> np.ndarray:
        u = rng.random(size)
        idx = np.searchsorted(self.cdf, u)
        # linear interpolation inside the histogram cell
        lo_cdf = np.where(idx > 0, self.cdf[idx - 1], 0.0)
        frac = (u - lo_cdf) / np.maximum(self.cdf[idx] - lo_cdf, 1e-300)
        x = self.grid[idx] + frac * self.dx
        out = x + theta
        return (out + math.pi) % (2.0 * math.pi) - math.pi


def sample_u1_outcome(state: WaveFunction, theta: float, rng: np.random.Generator,
                      size: int = 1) -> np.ndarray:
    return U1Sampler(state).sample(theta, rng, size)


@dataclass(frozen=True)
class MleOutcome:
    angle: float
    flat: bool


def _mle_u1(samples: np.ndarray, sampler: U1Sampler) -> MleOutcome:
    if samples.size < 1:
        raise InvalidInputError("need at least one sample")
    # coarse scan of the log-likelihood over a fixed angular grid, using the
    # precomputed periodic density table
    thetas = np.linspace(-math.pi, math.pi, MLE_GRID_U1, endpoint=False)
    rel = (samples[:, None] - thetas[None, :] + math.pi) % (2.0 * math.pi) - math.pi
    idx = np.floor((rel + math.pi) / sampler.dx).astype(int) % sampler.density.size
    logp = np.log(np.maximum(sampler.density, 1e-300))
    L = logp[idx].sum(axis=0)
    if np.ptp(L) < _FLAT_EPS * max(1.0, np.max(np.abs(L))):
        return MleOutcome(0.0, True)
    # tie-break toward the smallest |theta|
    best = np.flatnonzero(L == L.max())
    i = best[np.argmin(np.abs(thetas[best]))]

    def score(theta: float) -> float:
        x = (samples - theta + math.pi) % (2.0 * math.pi) - math.pi
        p, dp = sampler.pdf_and_derivative(x)
        return float(np.sum(-dp / np.maximum(p, 1e-300)))

    lo = thetas[(i - 1) % MLE_GRID_U1]
    hi = thetas[(i + 1) % MLE_GRID_U1]
    if hi < lo:  # wrapped bracket
        lo, hi = lo - 2.0 * math.pi, hi
    s_lo, s_hi = score(lo), score(hi)
    if s_lo <= 0.0 or s_hi >= 0.0:
        # score does not change sign across the bracket (grid max adequate)
        theta_hat = thetas[i]
    else:
        for _ in range(MLE_BISECTIONS_U1):
            mid = 0.5 * (lo + hi)
            if score(mid) > 0.0:
                lo = mid
            else:
                hi = mid
        theta_hat = 0.5 * (lo + hi)
    theta_hat = (theta_hat + math.pi) % (2.0 * math.pi) - math.pi
    return MleOutcome(float(theta_hat), False)


def mle_u1(samples: np.ndarray, state: WaveFunction) -> float:
    """Maximum-likelihood phase from covariant outcomes."""
    return _mle_u1(np.asarray(samples, dtype=float), U1Sampler(state)).angle


def fisher_u1(state: WaveFunction, grid_size: int = 2 ** 16) -> float:
    """Quadrature of the score variance at theta = 0.

    For admissible states this equals 4 E_phi with E_phi the centred second
    moment sum (k + lambda)^2 p_k, lambda = -sum k p_k.
    """
    p_mass = state.probabilities()
    lam = u1_shift(state.labels, p_mass)
    e_phi = float(np.sum((state.labels + lam) ** 2 * p_mass))
    if e_phi == 0.0:
        return 0.0
    sampler = U1Sampler(state, grid_size=grid_size)
    x = np.linspace(-math.pi, math.pi, grid_size, endpoint=False)
    p, dp = sampler.pdf_and_derivative(x)
    integrand = np.where(p > 1e-290, dp ** 2 / np.maximum(p, 1e-290), 0.0)
    return float(np.sum(integrand) * (2.0 * math.pi / grid_size))


def predicted_e_phi(state: WaveFunction) -> float:
    p = state.probabilities()
    lam = u1_shift(state.labels, p)
    return float(np.sum((state.labels + lam) ** 2 * p))


def run_u1_protocol(config: ProtocolConfig) -> ProtocolReport:
    """Monte-Carlo estimate of the mean loss 1 - cos(theta_hat - theta).

    m times the risk approaches 1/(8 E_phi) as the per-trial sample count m
    grows (half the inverse Fisher information, by the quadratic expansion
    of the loss)."""
    if config.group != "u1":
        raise InvalidInputError("config is not a phase-protocol config")
    sampler = U1Sampler(config.state)
    theta0 = float(config.true_parameter[0])
    losses = []
    flat_count = 0
    for t in range(config.trials):
        rng = trial_stream(config.seed, t)
        draws = sampler.sample(theta0, rng, config.samples_per_trial)
        out = _mle_u1(draws, sampler)
        if out.flat:
            flat_count += 1
            continue
        losses.append(1.0 - math.cos(out.angle - theta0))
    if flat_count > FLAT_TRIAL_CAP * config.trials:
        raise GroupestError(
            f"{flat_count} flat-likelihood trials exceed the {FLAT_TRIAL_CAP:.1%} cap"
        )
    losses = np.array(losses)
    mean = float(np.sum(losses) / losses.size)  # pairwise summation
    std_err = float(np.std(losses, ddof=1) / math.sqrt(losses.size))
    e_phi = predicted_e_phi(config.state)
    return ProtocolReport(
        group="u1",
        risk_estimate=mean,
        std_error=std_err,
        fisher_numeric=np.array(fisher_u1(config.state)),
        fisher_predicted=np.array(4.0 * e_phi),
        samples_per_trial=config.samples_per_trial,
        trials=config.trials,
        excluded_flat=flat_count,
    )
