"""Generic discrete-group results: the finite-group discrimination formula
and the finite-cut quadratic-form optimizer for compact groups."""

from __future__ import annotations

from typing import Mapping, Sequence

import numpy as np

from ..errors import InvalidInputError, UnsupportedStructureError
from .states import MinErrorReport


def finite_group_min_error(irrep_dims: Sequence[int], mult_dims: Sequence[int],
                           group_order: int) -> float:
    """Minimum discrimination error over a finite group.

    1 - (sum_l d_l * min(dim V_l, d_l)) / |G|: each available irrep block
    contributes its dimension times its usable rank, capped by the
    multiplicity space; the regular representation reaches zero error.
    """
    if group_order <= 0:
        raise InvalidInputError("group order must be positive")
    d = np.asarray(irrep_dims, dtype=float)
    v = np.asarray(mult_dims, dtype=float)
    if d.shape != v.shape or np.any(d < 1) or np.any(v < 1):
        raise InvalidInputError("dimension lists must align and be >= 1")
    covered = float(np.sum(d * np.minimum(v, d)))
    return float(np.clip(1.0 - covered / group_order, 0.0, 1.0))


def compact_cut_min(
    a: Mapping,
    cg: Mapping,
    dims: Mapping,
    allowed: Sequence,
    offset: float = 0.0,
) -> MinErrorReport:
    """Minimise the cut risk offset - sum c_l c_l' sqrt(d_l d_l') A_{ll'}.

    `a` maps each error-expansion label l'' to its coefficient, `cg` maps
    (l, l', l'') to the tensor-product multiplicity of l'' in l (x) l'*, and
    `dims` gives d_l. A is the symmetrised form
    A_{ll'} = sum_{l''} a_{l''} (cg[l,l',l''] + cg[l',l,l'']) / 2, required
    entrywise nonnegative. Substituting x = sqrt(d) c turns the problem into
    the largest eigenvalue of A on the unit sphere, whose top eigenvector is
    entrywise nonnegative (so the c >= 0 constraint is inactive). The
    trivial-character coefficient is passed as `offset` and simply added.
    """
    labels = list(allowed)
    if not labels:
        raise InvalidInputError("allowed label set must be nonempty")
    n = len(labels)
    A = np.zeros((n, n))
    for i, l in enumerate(labels):
        for j, lp in enumerate(labels):
            s = 0.0
            for lpp, coeff in a.items():
                s += coeff * (cg.get((l, lp, lpp), 0.0) + cg.get((lp, l, lpp), 0.0)) / 2.0
            A[i, j] = s
    if np.any(A < 0):
        raise UnsupportedStructureError(
            "quadratic-form matrix has negative entries; the nonnegative "
            "eigenvector argument does not apply"
        )
    vals, vecs = np.linalg.eigh(A)
    top = vals[-1]
    x = vecs[:, -1]
    if x.sum() < 0:
        x = -x
    x = np.clip(x, 0.0, None)
    x /= np.linalg.norm(x)
    d = np.array([float(dims[l]) for l in labels])
    c = x / np.sqrt(d)
    return MinErrorReport(
        group="compact_cut",
        constraint=f"labels {labels[0]}..{labels[-1]}",
        kappa=float(offset - top),
        method="finite_cut",
        notes="amplitudes=" + ",".join(f"{ci:.12g}" for ci in c),
    )
