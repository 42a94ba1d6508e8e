"""Rotation-estimation protocols on SU(2) and both SO(3) factors.

Group elements are unit quaternions (w, x, y, z). Outcome laws are class
functions of the relative rotation, so sampling factorises into a radial
angle draw (inverse CDF) times a uniform axis; the likelihood depends on
samples only through quaternion inner products with the candidate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev

from ..errors import GroupestError, InvalidInputError, ResolutionError
from ..groups.states import WaveFunction
from .config import (
    FLAT_TRIAL_CAP,
    MLE_STEP_TOL_GROUP,
    SAMPLER_GRID,
    ProtocolConfig,
    ProtocolReport,
)
from .rng import trial_stream

_FLAT_EPS = 1e-12


# ---------------------------------------------------------------- quaternions

def quat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    aw, ax, ay, az = np.moveaxis(a, -1, 0)
    bw, bx, by, bz = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )


def quat_conj(a: np.ndarray) -> np.ndarray:
    out = a.copy()
    out[..., 1:] *= -1.0
    return out


def quat_from_rotvec(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    single = v.ndim == 1
    v = np.atleast_2d(v)
    angle = np.linalg.norm(v, axis=-1)
    half = angle / 2.0
    small = angle < 1e-12
    scale = np.where(small, 0.5, np.sin(half) / np.where(small, 1.0, angle))
    out = np.concatenate([np.cos(half)[..., None], scale[..., None] * v], axis=-1)
    return out[0] if single else out


def quat_from_axis_angle(axis: np.ndarray, angle: np.ndarray) -> np.ndarray:
    half = angle / 2.0
    return np.concatenate(
        [np.cos(half)[..., None], np.sin(half)[..., None] * axis], axis=-1
    )


# the vertices of the 24-cell: the binary tetrahedral group, a uniform
# 24-point cover of the unit quaternions (coarse MLE grid)
def _cell24() -> np.ndarray:
    pts = []
    for i in range(4):
        for s in (1.0, -1.0):
            q = np.zeros(4)
            q[i] = s
            pts.append(q)
    for signs in range(16):
        q = np.array([0.5 * (1 if signs >> b & 1 else -1) for b in range(4)])
        pts.append(q)
    return np.array(pts)


CELL24 = _cell24()


# ----------------------------------------------------------------- sampling

class ClassFunctionSampler:
    """Radial inverse-CDF sampler for densities g(theta)^2/(2 pi) on
    (-2 pi, 2 pi], with g(theta) = sum beta_l sin(d_l theta / 2).

    beta are the dimension-weighted block amplitudes sqrt(d) c; the sine
    frequencies d/2 make the law normalised by character orthogonality.
    """

    def __init__(self, state: WaveFunction, grid_size: int = SAMPLER_GRID):
        dims = state.measure_weights
        self.beta = np.sqrt(dims) * state.amplitudes
        self.dims = dims
        self.labels = state.labels
        if np.max(dims) / 2.0 > grid_size // 4:
            raise ResolutionError("state bandwidth exceeds the radial grid")
        # u(x) = sum_d beta_d U_{d-1}(x) as a Chebyshev-T series derivative:
        # T_d'(x) = d U_{d-1}(x), so u = d/dx sum_d (beta_d / d) T_d(x)
        series = np.zeros(int(round(np.max(dims))) + 1)
        for d, b in zip(dims, self.beta):
            series[int(round(d))] += b / d
        self._u_series = chebyshev.chebder(series)
        self.grid = np.linspace(-2.0 * math.pi, 2.0 * math.pi, grid_size, endpoint=False)
        self.density = self.radial_pdf(self.grid)
        cdf = np.cumsum(self.density)
        self.dx = 4.0 * math.pi / grid_size
        self.total = float(cdf[-1] * self.dx)
        self.cdf = cdf / cdf[-1]

    def g(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        return np.sin(np.multiply.outer(theta, self.dims / 2.0)) @ self.beta

    def g_prime(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        return np.cos(np.multiply.outer(theta, self.dims / 2.0)) @ (self.beta * self.dims / 2.0)

    def radial_pdf(self, theta) -> np.ndarray:
        return self.g(theta) ** 2 / (2.0 * math.pi)

    def log_radial(self, theta) -> np.ndarray:
        return np.log(np.maximum(self.g(theta) ** 2, 1e-300))

    def character_sum(self, dots: np.ndarray) -> np.ndarray:
        """u(q) = sum_d beta_d U_{d-1}(<q, q_i>) with Chebyshev-U.

        Since sin(d phi) = sin(phi) U_{d-1}(cos phi), u equals
        g(theta)/sin(theta/2) with cos(theta/2) the quaternion inner
        product: the outcome density relative to Haar measure is
        proportional to u^2 (the sin^2(theta/2) radial Haar factor
        cancels one from g^2)."""
        return chebyshev.chebval(np.clip(dots, -1.0, 1.0), self._u_series)

    def sample_quaternions(self, rng: np.random.Generator, size: int) -> np.ndarray:
        u = rng.random(size)
        idx = np.searchsorted(self.cdf, u)
        lo_cdf = np.where(idx > 0, self.cdf[idx - 1], 0.0)
        frac = (u - lo_cdf) / np.maximum(self.cdf[idx] - lo_cdf, 1e-300)
        theta = self.grid[idx] + frac * self.dx
        # uniform axis
        z = rng.uniform(-1.0, 1.0, size)
        phi = rng.uniform(0.0, 2.0 * math.pi, size)
        r = np.sqrt(np.maximum(1.0 - z ** 2, 0.0))
        axis = np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=-1)
        return quat_from_axis_angle(axis, theta)


def sample_su2_outcome(state: WaveFunction, g_true: np.ndarray,
                       rng: np.random.Generator, size: int = 1) -> np.ndarray:
    """Draw outcomes g_i = g_true * relative element, as quaternions."""
    rel = ClassFunctionSampler(state).sample_quaternions(rng, size)
    return quat_mul(np.broadcast_to(g_true, rel.shape), rel)


# ---------------------------------------------------------------------- MLE

@dataclass(frozen=True)
class GroupMleOutcome:
    quaternion: np.ndarray
    flat: bool


def _log_likelihood(sampler: ClassFunctionSampler, dots: np.ndarray) -> float:
    # density relative to Haar measure: proportional to u(<q, q_i>)^2
    u = sampler.character_sum(dots)
    return float(np.sum(np.log(np.maximum(u ** 2, 1e-300))))


def _mle_group(samples: np.ndarray, sampler: ClassFunctionSampler) -> GroupMleOutcome:
    # coarse stage: best of the 24-cell vertices
    L = np.array([_log_likelihood(sampler, samples @ q) for q in CELL24])
    if np.ptp(L) < _FLAT_EPS * max(1.0, np.max(np.abs(L))):
        return GroupMleOutcome(np.array([1.0, 0.0, 0.0, 0.0]), True)
    q = CELL24[int(np.argmax(L))].copy()
    best = _log_likelihood(sampler, samples @ q)
    # pattern search in the local rotation-vector chart, shrinking steps;
    # all six axis directions are scored in one vectorised likelihood call
    directions = np.concatenate([np.eye(3), -np.eye(3)])
    step = 0.7
    while step > MLE_STEP_TOL_GROUP:
        cands = quat_mul(np.broadcast_to(q, (6, 4)),
                         quat_from_rotvec(step * directions))
        u = sampler.character_sum(samples @ cands.T)
        vals = np.sum(np.log(np.maximum(u ** 2, 1e-300)), axis=0)
        i = int(np.argmax(vals))
        if vals[i] > best:
            best, q = float(vals[i]), cands[i]
        else:
            step /= 2.0
    return GroupMleOutcome(q / np.linalg.norm(q), False)


def mle_su2(samples: np.ndarray, state: WaveFunction, group_tag: str = "su2") -> np.ndarray:
    """Maximum-likelihood group element (unit quaternion) from outcomes."""
    out = _mle_group(np.asarray(samples, dtype=float), ClassFunctionSampler(state))
    return out.quaternion


# -------------------------------------------------------------------- Fisher

def fisher_su2(state: WaveFunction, grid_size: int = 2 ** 16) -> np.ndarray:
    """Score-covariance matrix at the identity, in rotation-vector
    coordinates; equals (4/3) E_phi I_3 for the class-function laws.

    The score is -n_s d/d theta log u^2 with u = g/sin(theta/2) (the
    density relative to Haar measure), so the radial factor is
    J_rad = (1/2 pi) int 4 (u' sin(theta/2))^2 d theta, written without
    dividing by g for stability; the axis factor uses the six octahedron
    vertices, which integrate the quadratic n_s n_t moments over the
    sphere exactly.
    """
    p = state.probabilities()
    e_phi = float(np.sum(state.labels * (state.labels + 1.0) * p))
    if e_phi == 0.0:
        return np.zeros((3, 3))
    sampler = ClassFunctionSampler(state, grid_size=min(grid_size, 2 ** 16))
    theta = np.linspace(-2.0 * math.pi, 2.0 * math.pi, grid_size, endpoint=False)
    g = sampler.g(theta)
    gp = sampler.g_prime(theta)
    s = np.sin(theta / 2.0)
    # u' sin(theta/2) = (g' sin - (g/2) cos) / sin; the numerator vanishes
    # cubically at the zeros of sin, so masking those grid points is exact
    # in the limit
    num = gp * s - 0.5 * g * np.cos(theta / 2.0)
    safe = np.abs(s) > 1e-8
    radial = np.zeros_like(theta)
    radial[safe] = 4.0 * (num[safe] / s[safe]) ** 2 / (2.0 * math.pi)
    j_rad = float(np.sum(radial) * (4.0 * math.pi / grid_size))
    axes = np.concatenate([np.eye(3), -np.eye(3)])
    J = np.zeros((3, 3))
    for n in axes:
        J += j_rad * np.outer(n, n)
    return J / len(axes)


def predicted_e_phi_group(state: WaveFunction) -> float:
    return float(np.sum(state.labels * (state.labels + 1.0) * state.probabilities()))


# ------------------------------------------------------------------ protocol

def _loss(group: str, q_hat: np.ndarray, q_true: np.ndarray) -> float:
    dot = float(np.dot(q_hat, q_true))
    if group == "su2":
        # risk 1 - cos(theta/2); cos(theta/2) is the quaternion inner product
        return 1.0 - dot
    # rotation risk 1 - cos(theta), blind to the quaternion sign
    return 2.0 * (1.0 - dot ** 2)


def run_group_protocol(config: ProtocolConfig) -> ProtocolReport:
    """Monte-Carlo risk of i.i.d. sampling plus maximum likelihood.

    n times the risk approaches 9/(32 E_phi) for the SU(2) risk and
    9/(8 E_phi) for the SO(3) risk (the trace of the inverse Fisher matrix
    through the quadratic expansion of each loss)."""
    if config.group not in ("su2", "so3_plus", "so3_minus"):
        raise InvalidInputError("config is not a rotation-protocol config")
    sampler = ClassFunctionSampler(config.state)
    q_true = quat_from_rotvec(config.true_parameter)
    losses = []
    flat_count = 0
    for t in range(config.trials):
        rng = trial_stream(config.seed, t)
        rel = sampler.sample_quaternions(rng, config.samples_per_trial)
        samples = quat_mul(np.broadcast_to(q_true, rel.shape), rel)
        out = _mle_group(samples, sampler)
        if out.flat:
            flat_count += 1
            continue
        losses.append(_loss(config.group, out.quaternion, q_true))
    if flat_count > FLAT_TRIAL_CAP * config.trials:
        raise GroupestError(
            f"{flat_count} flat-likelihood trials exceed the {FLAT_TRIAL_CAP:.1%} cap"
        )
    losses = np.array(losses)
    mean = float(np.sum(losses) / losses.size)
    std_err = float(np.std(losses, ddof=1) / math.sqrt(losses.size))
    e_phi = predicted_e_phi_group(config.state)
    return ProtocolReport(
        group=config.group,
        risk_estimate=mean,
        std_error=std_err,
        fisher_numeric=fisher_su2(config.state),
        fisher_predicted=(4.0 / 3.0) * e_phi * np.eye(3),
        samples_per_trial=config.samples_per_trial,
        trials=config.trials,
        excluded_flat=flat_count,
    )
