"""Random walk on total angular momentum induced by coupling fresh qubits.

Adding a maximally mixed qubit to a block of total angular momentum j and
measuring the new total moves j to j + 1/2 with probability
(2j + 2)/(2(2j + 1)) and to j - 1/2 with probability 2j/(2(2j + 1)).
Starting from a single qubit (j = 1/2) and coupling n - 1 more, the scaled
variable x = j / sqrt(n) converges to the chi distribution with three
degrees of freedom: P(x <= t) -> gammainc(3/2, 2 t^2) (normalised lower
incomplete gamma), and the mean scaled energy E[j(j+1)]/n -> 3/4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import gammainc

from ..errors import InvalidInputError

EXACT_QUBIT_LIMIT = 30


@dataclass(frozen=True)
class SchurWalkResult:
    qubits: int
    twice_j: np.ndarray  # 2j values carrying positive mass, ascending
    probabilities: np.ndarray
    mean_energy: float  # E[j(j+1)]
    ks_distance: float  # sup gap to the chi-3 limit CDF at x = j/sqrt(n)


def _walk(steps: int, exact: bool):
    # index by 2j; start at 2j = 1 (a single qubit)
    size = steps + 2
    zero = Fraction(0) if exact else 0.0
    one = Fraction(1) if exact else 1.0
    p = [zero] * size
    p[1] = one
    for _ in range(steps):
        nxt = [zero] * size
        for tj in range(size - 1):
            mass = p[tj]
            if mass == zero:
                continue
            denom = 2 * (tj + 1)
            up = Fraction(tj + 2, denom) if exact else (tj + 2) / denom
            nxt[tj + 1] += mass * up
            if tj > 0:
                nxt[tj - 1] += mass * (one - up)
        p = nxt
    return p


def schur_walk(qubits: int, exact: bool | None = None) -> SchurWalkResult:
    """Distribution of total angular momentum of `qubits` coupled qubits.

    `exact` forces Fraction arithmetic (only for qubits <= 30); by default
    it is used automatically in that range and float recursion beyond.
    """
    if qubits < 1:
        raise InvalidInputError("qubits must be >= 1")
    if exact is None:
        exact = qubits <= EXACT_QUBIT_LIMIT
    if exact and qubits > EXACT_QUBIT_LIMIT:
        raise InvalidInputError(
            f"exact mode supports at most {EXACT_QUBIT_LIMIT} qubits"
        )
    p = _walk(qubits - 1, exact)
    probs = np.array([float(x) for x in p])
    keep = np.flatnonzero(probs > 0)
    twice_j = keep
    probs = probs[keep]
    j = twice_j / 2.0
    mean_energy = float(np.sum(j * (j + 1.0) * probs))
    x = j / np.sqrt(qubits)
    limit_cdf = gammainc(1.5, 2.0 * x ** 2)
    emp_cdf = np.cumsum(probs)
    # two-sided discrete Kolmogorov-Smirnov gap against the continuous limit
    upper = np.max(np.abs(emp_cdf - limit_cdf))
    lower = np.max(np.abs(np.concatenate([[0.0], emp_cdf[:-1]]) - limit_cdf))
    return SchurWalkResult(
        qubits=qubits,
        twice_j=np.array(twice_j, dtype=int),
        probabilities=probs,
        mean_energy=mean_energy,
        ks_distance=float(max(upper, lower)),
    )
