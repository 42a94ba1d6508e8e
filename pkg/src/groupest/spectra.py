"""Symmetric tridiagonal eigenproblems and two closed-form discrete spectra.

The numeric solver is the workhorse behind every ground-state-energy
evaluation in the package; the two closed-form spectra (path matrix and the
path matrix with a -1 on its first node) double as independent test oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import EmptyOperatorError, InvalidInputError

# Eigenvalue bisection tolerance and the residual bound every returned pair
# must satisfy (relative to the operator norm estimate).
EIGENVALUE_TOL = 1e-12
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class TridiagonalOperator:
    """A real symmetric tridiagonal matrix given by its two bands."""

    diagonal: np.ndarray
    offdiagonal: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.diagonal, dtype=float)
        e = np.asarray(self.offdiagonal, dtype=float)
        object.__setattr__(self, "diagonal", d)
        object.__setattr__(self, "offdiagonal", e)
        if d.ndim != 1 or e.ndim != 1:
            raise InvalidInputError("bands must be one-dimensional")
        if d.size == 0:
            raise EmptyOperatorError("operator must have dimension >= 1")
        if e.size != d.size - 1:
            raise InvalidInputError(
                f"offdiagonal length {e.size} does not match dimension {d.size}"
            )
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise InvalidInputError("operator entries must be finite")

    @property
    def dim(self) -> int:
        return self.diagonal.size

    def norm_bound(self) -> float:
        # Gershgorin-type bound on the spectral norm; cheap and adequate for
        # residual scaling.
        d, e = self.diagonal, self.offdiagonal
        if self.dim == 1:
            return max(abs(d[0]), 1.0)
        pad = np.concatenate(([0.0], np.abs(e), [0.0]))
        return max(float(np.max(np.abs(d) + pad[:-1] + pad[1:])), 1.0)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        d, e = self.diagonal, self.offdiagonal
        out = d * v
        if self.dim > 1:
            out[:-1] += e * v[1:]
            out[1:] += e * v[:-1]
        return out


@dataclass(frozen=True)
class SpectrumResult:
    """Ascending eigenvalues with unit eigenvectors (rows of `eigenvectors`)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray = field(repr=False)


def _fix_signs(vecs: np.ndarray) -> np.ndarray:
    # Convention: first component of non-negligible magnitude is positive.
    out = vecs.copy()
    for i, v in enumerate(out):
        nz = np.flatnonzero(np.abs(v) > 1e-12 * np.max(np.abs(v)))
        if nz.size and v[nz[0]] < 0:
            out[i] = -v
    return out


def solve_spectrum(op: TridiagonalOperator, count: int) -> SpectrumResult:
    """Smallest `count` eigenpairs of a symmetric tridiagonal operator.

    Backed by LAPACK's Sturm-sequence bisection plus inverse iteration,
    which is deterministic to fixed tolerance. Eigenvalues come back
    ascending; eigenvectors are unit-norm rows with the sign convention of
    `_fix_signs`.
    """
    if count < 1 or count > op.dim:
        raise InvalidInputError(f"count must be in [1, {op.dim}], got {count}")
    if op.dim == 1:
        vals = np.array([op.diagonal[0]])
        vecs = np.array([[1.0]])
    else:
        vals, vecs = eigh_tridiagonal(
            op.diagonal,
            op.offdiagonal,
            select="i",
            select_range=(0, count - 1),
            tol=EIGENVALUE_TOL,
        )
        vecs = vecs.T
    order = np.argsort(vals)
    vals, vecs = vals[order], vecs[order]
    norms = np.linalg.norm(vecs, axis=1)
    vecs = vecs / norms[:, None]
    vecs = _fix_signs(vecs)
    # residual audit: ||A v - lambda v|| <= RESIDUAL_TOL * ||A||
    bound = op.norm_bound()
    for lam, v in zip(vals, vecs):
        res = np.linalg.norm(op.matvec(v) - lam * v)
        if res > RESIDUAL_TOL * bound:
            raise InvalidInputError(
                f"residual {res:.3e} exceeds {RESIDUAL_TOL:.0e} * {bound:.3e}"
            )
    return SpectrumResult(vals, vecs)


def path_matrix(m: int) -> TridiagonalOperator:
    """Adjacency matrix of the path graph on m nodes."""
    if m < 1:
        raise InvalidInputError("m must be >= 1")
    return TridiagonalOperator(np.zeros(m), np.ones(max(m - 1, 0)))


def path_matrix_spectrum(m: int) -> SpectrumResult:
    """Exact spectrum of the m-node path: eigenvalues 2cos(j pi/(m+1)).

    Eigenvector j has components sin(j k pi/(m+1)), k = 1..m; ascending
    eigenvalue order corresponds to j = m..1.
    """
    if m < 1:
        raise InvalidInputError("m must be >= 1")
    j = np.arange(m, 0, -1)  # ascending eigenvalues
    vals = 2.0 * np.cos(j * np.pi / (m + 1))
    k = np.arange(1, m + 1)
    vecs = np.sin(np.outer(j, k) * np.pi / (m + 1))
    vecs /= np.linalg.norm(vecs, axis=1)[:, None]
    return SpectrumResult(vals, _fix_signs(vecs))


def odd_sector_operator(l: int) -> TridiagonalOperator:
    """Path matrix on l nodes with diagonal entry -1 at the first node."""
    if l < 1:
        raise InvalidInputError("l must be >= 1")
    d = np.zeros(l)
    d[0] = -1.0
    return TridiagonalOperator(d, np.ones(max(l - 1, 0)))


def odd_sector_spectrum(l: int) -> SpectrumResult:
    """Exact spectrum of `odd_sector_operator`: eigenvalues 2cos(2t pi/(2l+1)).

    Eigenvector t is proportional to sin(2t(k - 1/2) pi/(2l+1)), k = 1..l.
    Ascending order corresponds to t = l..1.
    """
    if l < 1:
        raise InvalidInputError("l must be >= 1")
    t = np.arange(l, 0, -1)
    vals = 2.0 * np.cos(2.0 * t * np.pi / (2 * l + 1))
    k = np.arange(1, l + 1) - 0.5
    vecs = np.sin(2.0 * np.outer(t, k) * np.pi / (2 * l + 1))
    vecs /= np.linalg.norm(vecs, axis=1)[:, None]
    return SpectrumResult(vals, _fix_signs(vecs))
