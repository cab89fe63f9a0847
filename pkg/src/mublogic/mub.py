"""The complete set of d+1 mutually unbiased bases for prime d.

Bases a = 0..d-1 are eigenbases of X Z^a; basis a = d is the computational
(Z eigen-) basis. For odd d the states come from the closed formula

    |j>_a = (1/sqrt(d)) sum_k eta^(-(j k + a s_k)) |k>,   s_k = k + ... + (d-1),

with exponents reduced mod d. The labeling convention is fixed by the
Z-shift property Z|j>_a = |j-1 mod d>_a (exact, no phase), which the
encoding layer relies on.

d = 2 needs one special case: the integer-exponent formula cannot produce
the X Z eigenbasis (that basis has imaginary components), so basis a = 1 is
seeded with |0>_1 = (|0> + i|1>)/sqrt(2) and the remaining label is
generated by the same Z-shift convention. The verify() report, not the
formula, is the arbiter that all defining properties hold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .modmath import Dimension
from .qlinalg import Operator, StateVector, ket, pauli_x, pauli_z, power, root_of_unity


@dataclass(frozen=True, eq=False)
class MubBasis:
    """One orthonormal basis: partition index a and its d states, indexed by j."""

    a: int
    states: tuple[StateVector, ...]

    def matrix(self) -> np.ndarray:
        """d x d array with the basis states as columns."""
        return np.column_stack([s.amplitudes for s in self.states])


@dataclass(frozen=True)
class MubReport:
    """Worst-case deviations from the defining properties of a full MUB set."""

    max_orthonormality_deviation: float
    max_unbiasedness_deviation: float
    max_eigen_residual: float
    max_shift_residual: float
    tol: float
    passed: bool

    @property
    def max_deviation(self) -> float:
        return max(
            self.max_orthonormality_deviation,
            self.max_unbiasedness_deviation,
            self.max_eigen_residual,
            self.max_shift_residual,
        )


def _shift_exponents(d: int) -> list[int]:
    # s_k = k + (k+1) + ... + (d-1), reduced mod d
    return [sum(range(k, d)) % d for k in range(d)]


def basis_state(dim: Dimension, a: int, j: int) -> StateVector:
    """State |j>_a of basis a; basis a = d is the computational basis."""
    d = dim.d
    if not 0 <= a <= d:
        raise ValueError(f"basis index {a} out of range [0, {d}]")
    if not 0 <= j < d:
        raise ValueError(f"state label {j} out of range [0, {d})")
    if a == d:
        return ket(dim, j)
    if d == 2 and a == 1:
        # |j>_1 = Z^(-j) |0>_1 with |0>_1 = (|0> + i|1>)/sqrt(2)
        half = 1.0 / math.sqrt(2.0)
        sign = 1.0 if j == 0 else -1.0
        return StateVector(np.array([half, sign * 1j * half]), dim)
    s = _shift_exponents(d)
    norm = 1.0 / math.sqrt(d)
    amps = np.array(
        [norm * root_of_unity(dim, -(j * k + a * s[k])) for k in range(d)]
    )
    return StateVector(amps, dim)


def full_set(dim: Dimension) -> list[MubBasis]:
    """All d+1 bases, a = 0..d."""
    return [
        MubBasis(a, tuple(basis_state(dim, a, j) for j in range(dim.d)))
        for a in range(dim.d + 1)
    ]


def _eigen_residual(op: np.ndarray, basis: np.ndarray) -> float:
    # Rayleigh quotient per column, then the residual norm
    image = op @ basis
    eigenvalues = np.sum(basis.conj() * image, axis=0)
    return float(np.max(np.linalg.norm(image - basis * eigenvalues, axis=0)))


def verify(dim: Dimension, tol: float = 1e-10) -> MubReport:
    """Measure the worst deviation from each defining property.

    Checks orthonormality within every basis, cross-basis overlap
    |<j_a|k_m>|^2 against 1/d, the eigenvector property of X Z^a on its
    basis, and the exact Z-shift labeling. Passing means every maximum is
    below tol.
    """
    d = dim.d
    bases = full_set(dim)
    matrices = [b.matrix() for b in bases]
    eye = np.eye(d)
    x = pauli_x(dim).entries
    z = pauli_z(dim).entries

    ortho = max(
        float(np.max(np.abs(m.conj().T @ m - eye))) for m in matrices
    )
    unbias = max(
        float(np.max(np.abs(np.abs(matrices[a].conj().T @ matrices[m]) ** 2 - 1.0 / d)))
        for a in range(d + 1)
        for m in range(a + 1, d + 1)
    )
    eigen = max(
        _eigen_residual(x @ np.linalg.matrix_power(z, a), matrices[a])
        for a in range(d)
    )
    shift = max(
        float(
            np.max(
                np.linalg.norm(
                    z @ matrices[a] - matrices[a][:, (np.arange(d) - 1) % d], axis=0
                )
            )
        )
        for a in range(d)
    )

    passed = max(ortho, unbias, eigen, shift) < tol
    return MubReport(ortho, unbias, eigen, shift, tol, passed)


def basis_operator(dim: Dimension, a: int) -> Operator:
    """The operator whose eigenbasis is basis a: X Z^a for a < d, Z for a = d."""
    d = dim.d
    if not 0 <= a <= d:
        raise ValueError(f"basis index {a} out of range [0, {d}]")
    if a == d:
        return pauli_z(dim)
    return pauli_x(dim) @ power(pauli_z(dim), a)
