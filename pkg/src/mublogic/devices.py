"""Preparation and measurement devices for a single qudit.

Preparation encodes an axiom {a, b} by starting from |0>_a and applying
U = X^f(0) Z^f(1) for a function f consistent with the axiom. Any member of
the axiom's group yields the same state up to a global phase; the public
prepare() uses the canonical member with f(0) = 0 (or f(1) = 0 for the
value-pin partition a = d), so the unitary degenerates to Z^b (or X^b).

Measurement in basis m returns Born probabilities over outcome labels n.
Outcome labels follow n(j) = -j mod d for the shift-generated bases m < d,
and n(j) = j for the computational basis m = d; under the convention
Z|j>_a = |j-1>_a this is the unique affine labeling that makes a state
encoding {a, b} report n = b with certainty when measured at m = a.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .logic import BinaryFunction, Proposition
from .modmath import Dimension
from .mub import basis_state
from .qlinalg import Operator, StateVector, apply, compose, inner, pauli_x, pauli_z, power

# Per-trial stream derivation: PCG64 seeded with seed XOR (trial * mix),
# all mod 2**64. Multiplication by an odd constant is a bijection on 64-bit
# ints, so distinct trials never collide for a fixed seed.
TRIAL_SEED_MIX = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1

PROBABILITY_SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class OutcomeDistribution:
    """Born probabilities over outcome labels n = 0..d-1 for measurement m."""

    probabilities: np.ndarray
    dim: Dimension
    m: int

    def __post_init__(self) -> None:
        probs = np.array(self.probabilities, dtype=np.float64)
        if probs.shape != (self.dim.d,):
            raise ValueError(
                f"expected {self.dim.d} probabilities, got shape {probs.shape}"
            )
        if not 0 <= self.m <= self.dim.d:
            raise ValueError(f"measurement index {self.m} out of range")
        if np.any(probs < -PROBABILITY_SUM_TOL) or np.any(probs > 1.0 + PROBABILITY_SUM_TOL):
            raise ValueError("probabilities must lie in [0, 1]")
        total = float(probs.sum())
        if abs(total - 1.0) > PROBABILITY_SUM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        probs = np.clip(probs, 0.0, 1.0)
        probs.flags.writeable = False
        object.__setattr__(self, "probabilities", probs)


def encode_unitary(f: BinaryFunction) -> Operator:
    """U = X^f(0) Z^f(1); the Z power acts first on the ket."""
    dim = f.dim
    return compose(power(pauli_x(dim), f.f0.value), power(pauli_z(dim), f.f1.value))


def prepare(axiom: Proposition) -> StateVector:
    """Encode the axiom via its canonical group member.

    The result is |-b mod d>_a up to a global phase for a < d, and exactly
    |b> for a = d.
    """
    dim = axiom.dim
    if axiom.a < dim.d:
        canonical = BinaryFunction.from_values(0, axiom.b.value, dim)
    else:
        canonical = BinaryFunction.from_values(axiom.b.value, 0, dim)
    return apply(encode_unitary(canonical), basis_state(dim, axiom.a, 0))


def prepare_with(f: BinaryFunction, a: int) -> StateVector:
    """Encode via an arbitrary function: U_f applied to |0>_a.

    Every f belongs to exactly one group of partition a, so the result is
    phase-free-equal to prepare() of that group's proposition.
    """
    dim = f.dim
    if not 0 <= a <= dim.d:
        raise ValueError(f"basis index {a} out of range [0, {dim.d}]")
    return apply(encode_unitary(f), basis_state(dim, a, 0))


def born(state: StateVector, m: int) -> OutcomeDistribution:
    """Born probabilities of measuring `state` in basis m, over labels n."""
    dim = state.dim
    d = dim.d
    if not 0 <= m <= d:
        raise ValueError(f"measurement index {m} out of range [0, {d}]")
    raw = [abs(inner(basis_state(dim, m, j), state)) ** 2 for j in range(d)]
    if m == d:
        probs = raw
    else:
        probs = [raw[(-n) % d] for n in range(d)]
    return OutcomeDistribution(np.asarray(probs), dim, m)


def sample(dist: OutcomeDistribution, rng: np.random.Generator) -> int:
    """One outcome by inverse-CDF over cumulative probabilities in label order.

    Ties at cell boundaries resolve to the smaller label; zero-probability
    cells are never selected.
    """
    u = rng.random()
    cumulative = 0.0
    for n, p in enumerate(dist.probabilities):
        cumulative += p
        if u < cumulative:
            return n
    # u landed past the last boundary through rounding; return the largest
    # label that actually carries probability
    supported = np.flatnonzero(dist.probabilities > 0.0)
    return int(supported[-1])


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent, reproducible stream for one trial of a seeded experiment."""
    if trial < 0:
        raise ValueError("trial index must be non-negative")
    derived = (seed ^ ((trial * TRIAL_SEED_MIX) & _MASK64)) & _MASK64
    return np.random.default_rng(derived)
