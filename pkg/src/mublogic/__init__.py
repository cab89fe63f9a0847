"""Qudit encoding of modular-arithmetic axioms and their MUB measurements.

The library enumerates the d**2 functions f: {0,1} -> Z_d, partitions them
d+1 ways into proposition groups, encodes a chosen axiom into a d-level
state, measures in any of the d+1 mutually unbiased bases, and checks that
brute-force decidability and Born statistics agree cell by cell: decidable
propositions give deterministic outcomes, undecidable ones give exactly
uniform statistics.
"""

from .modmath import Dimension, DimensionMismatch, NotPrimeError, Residue, is_prime
from .logic import (
    BinaryFunction,
    Decidability,
    Proposition,
    all_functions,
    decide,
    group,
    holds,
    intersect,
    outcome_multiplicities,
    partition_table,
)
from .qlinalg import (
    Operator,
    StateVector,
    apply,
    compose,
    identity,
    inner,
    ket,
    operator_distance,
    operator_phase_distance,
    pauli_x,
    pauli_z,
    phase_free_equal,
    power,
    root_of_unity,
    scale,
)
from .mub import MubBasis, MubReport, basis_operator, basis_state, full_set, verify
from .devices import (
    TRIAL_SEED_MIX,
    OutcomeDistribution,
    born,
    encode_unitary,
    prepare,
    prepare_with,
    sample,
    trial_rng,
)
from .experiment import (
    ALPHA,
    CHI2_CRITICAL_001,
    Behavior,
    CrossCell,
    CrossReport,
    ExperimentConfig,
    Tally,
    UniformityResult,
    UniformityVerdict,
    ValidityError,
    chi_square_uniform,
    cross_validate,
    observed_behavior,
    predicted_behavior,
    run,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "Behavior",
    "BinaryFunction",
    "CHI2_CRITICAL_001",
    "CrossCell",
    "CrossReport",
    "Decidability",
    "Dimension",
    "DimensionMismatch",
    "ExperimentConfig",
    "MubBasis",
    "MubReport",
    "NotPrimeError",
    "Operator",
    "OutcomeDistribution",
    "Proposition",
    "Residue",
    "StateVector",
    "Tally",
    "TRIAL_SEED_MIX",
    "UniformityResult",
    "UniformityVerdict",
    "ValidityError",
    "all_functions",
    "apply",
    "basis_operator",
    "basis_state",
    "born",
    "chi_square_uniform",
    "compose",
    "cross_validate",
    "decide",
    "encode_unitary",
    "full_set",
    "group",
    "holds",
    "identity",
    "inner",
    "intersect",
    "is_prime",
    "ket",
    "observed_behavior",
    "operator_distance",
    "operator_phase_distance",
    "outcome_multiplicities",
    "partition_table",
    "pauli_x",
    "pauli_z",
    "phase_free_equal",
    "power",
    "predicted_behavior",
    "prepare",
    "prepare_with",
    "root_of_unity",
    "run",
    "sample",
    "scale",
    "trial_rng",
    "verify",
]
