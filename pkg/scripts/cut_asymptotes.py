#!/usr/bin/env python3
"""Print n^2 * kappa for growing representation cuts against the limits
pi^2/8 (phase), pi^2/2 (rotations), and 2 pi^2 (tensored qubits)."""

import math

from groupest.groups import (
    so3_finite_cut_min,
    so3_tensor_qubit_asymptote,
    su2_finite_cut_min,
    u1_finite_cut_min,
)

SIZES = [10, 30, 100, 300, 1000, 3000]


def main() -> None:
    print(f"{'n':>6} {'u1':>12} {'su2':>12} {'so3_int':>12} "
          f"{'so3_half':>12} {'qubits':>12}")
    for n in SIZES:
        row = [
            n ** 2 * u1_finite_cut_min(n).kappa,
            n ** 2 * su2_finite_cut_min(n).kappa,
            n ** 2 * so3_finite_cut_min(n, "integer").kappa,
            n ** 2 * so3_finite_cut_min(n, "half_integer").kappa,
            so3_tensor_qubit_asymptote(n),
        ]
        print(f"{n:>6} " + " ".join(f"{v:>12.6f}" for v in row))
    print(f"{'limit':>6} {math.pi**2/8:>12.6f} {math.pi**2/2:>12.6f} "
          f"{math.pi**2/2:>12.6f} {math.pi**2/2:>12.6f} {2*math.pi**2:>12.6f}")


if __name__ == "__main__":
    main()
