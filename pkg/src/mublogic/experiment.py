"""Multi-trial experiments, uniformity statistics, and cross-validation.

The cross-validation sweeps every axiom {a, b} against every measurement
setting m and checks that the two routes agree cell by cell:

  * logical route: brute-force decidability of the propositions {m, n}
    relative to the axiom, plus counting multiplicities over the axiom's
    group;
  * quantum route: exact Born probabilities of the encoded state.

Sampling experiments model single-run outcomes with a seeded pseudo-random
stream. That stream is a simulation device for reproducibility, not a claim
about where the randomness of a physical measurement comes from.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .devices import born, prepare, sample, trial_rng
from .logic import Decidability, Proposition, decide, outcome_multiplicities
from .modmath import Dimension

ALPHA = 0.001

# Upper critical values of the chi-square distribution at alpha = 0.001,
# degrees of freedom 1..30, from the standard reference table (checked
# against scipy.stats.chi2.ppf in the test suite).
CHI2_CRITICAL_001 = {
    1: 10.828, 2: 13.816, 3: 16.266, 4: 18.467, 5: 20.515,
    6: 22.458, 7: 24.322, 8: 26.124, 9: 27.877, 10: 29.588,
    11: 31.264, 12: 32.909, 13: 34.528, 14: 36.123, 15: 37.697,
    16: 39.252, 17: 40.790, 18: 42.312, 19: 43.820, 20: 45.315,
    21: 46.797, 22: 48.268, 23: 49.728, 24: 51.179, 25: 52.620,
    26: 54.052, 27: 55.476, 28: 56.892, 29: 58.301, 30: 59.703,
}


class ValidityError(ValueError):
    """A statistical test's validity preconditions are not met."""


class UniformityVerdict(Enum):
    CONSISTENT_WITH_UNIFORM = "ConsistentWithUniform"
    REJECT_UNIFORM = "RejectUniform"


@dataclass(frozen=True)
class ExperimentConfig:
    dim: Dimension
    axiom: Proposition
    m: int
    trials: int
    seed: int

    def __post_init__(self) -> None:
        if self.axiom.dim != self.dim:
            raise ValueError("axiom dimension does not match config dimension")
        if not 0 <= self.m <= self.dim.d:
            raise ValueError(f"measurement index {self.m} out of range")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass(frozen=True)
class Tally:
    """Outcome counts of a completed experiment, with its config echoed."""

    counts: tuple[int, ...]
    config: ExperimentConfig

    def __post_init__(self) -> None:
        if len(self.counts) != self.config.dim.d:
            raise ValueError("one count per outcome label required")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")
        if sum(self.counts) != self.config.trials:
            raise ValueError("counts must sum to the trial count")


@dataclass(frozen=True)
class UniformityResult:
    chi_square_statistic: float
    degrees_of_freedom: int
    critical_value: float
    verdict: UniformityVerdict


def run(config: ExperimentConfig) -> Tally:
    """Prepare once, compute Born probabilities once, then sample per trial.

    Each trial draws from its own derived stream, so the tally is
    independent of execution order and reproducible from (seed, trials).
    """
    dist = born(prepare(config.axiom), config.m)
    counts = [0] * config.dim.d
    for trial in range(config.trials):
        counts[sample(dist, trial_rng(config.seed, trial))] += 1
    return Tally(tuple(counts), config)


def chi_square_uniform(tally: Tally) -> UniformityResult:
    """Goodness-of-fit test of the tally against the uniform distribution.

    Requires trials >= 5 d (the usual expected-count floor) and an embedded
    critical value for d - 1 degrees of freedom; raises ValidityError
    otherwise instead of returning a verdict.
    """
    d = tally.config.dim.d
    trials = tally.config.trials
    if trials < 5 * d:
        raise ValidityError(
            f"chi-square needs at least {5 * d} trials for d={d}, got {trials}"
        )
    df = d - 1
    if df not in CHI2_CRITICAL_001:
        raise ValidityError(f"no embedded critical value for df={df}")
    expected = trials / d
    statistic = sum((c - expected) ** 2 / expected for c in tally.counts)
    critical = CHI2_CRITICAL_001[df]
    verdict = (
        UniformityVerdict.REJECT_UNIFORM
        if statistic > critical
        else UniformityVerdict.CONSISTENT_WITH_UNIFORM
    )
    return UniformityResult(float(statistic), df, critical, verdict)


@dataclass(frozen=True)
class Behavior:
    """Either a point mass on one outcome, exact uniformity, or neither."""

    kind: str  # "deterministic" | "uniform" | "mixed"
    outcome: int | None = None

    @classmethod
    def deterministic(cls, outcome: int) -> "Behavior":
        return cls("deterministic", outcome)

    @classmethod
    def uniform(cls) -> "Behavior":
        return cls("uniform")

    @classmethod
    def mixed(cls) -> "Behavior":
        return cls("mixed")


def observed_behavior(probabilities, d: int, tol: float) -> Behavior:
    """Classify an exact Born distribution at tolerance tol."""
    for n, p in enumerate(probabilities):
        if p > 1.0 - tol:
            return Behavior.deterministic(n)
    if all(abs(p - 1.0 / d) <= tol for p in probabilities):
        return Behavior.uniform()
    return Behavior.mixed()


def predicted_behavior(axiom: Proposition, m: int) -> Behavior:
    """Forecast the measurement statistics from decidability alone."""
    d = axiom.dim.d
    decisions = [
        decide(axiom, Proposition.of(m, n, axiom.dim)) for n in range(d)
    ]
    true_outcomes = [n for n, v in enumerate(decisions) if v is Decidability.PROVABLY_TRUE]
    if len(true_outcomes) == 1 and all(
        v is Decidability.PROVABLY_FALSE
        for n, v in enumerate(decisions)
        if n != true_outcomes[0]
    ):
        return Behavior.deterministic(true_outcomes[0])
    if all(v is Decidability.UNDECIDABLE for v in decisions):
        return Behavior.uniform()
    return Behavior.mixed()


@dataclass(frozen=True)
class CrossCell:
    axiom: Proposition
    m: int
    predicted: Behavior
    observed: Behavior
    agree: bool
    born_vs_counting_deviation: float


@dataclass(frozen=True)
class CrossReport:
    dim: Dimension
    tol: float
    cells: tuple[CrossCell, ...]

    @property
    def disagreements(self) -> int:
        return sum(1 for c in self.cells if not c.agree)

    @property
    def all_agree(self) -> bool:
        return self.disagreements == 0

    @property
    def max_born_vs_counting_deviation(self) -> float:
        return max(c.born_vs_counting_deviation for c in self.cells)


def cross_validate(dim: Dimension, tol: float = 1e-9) -> CrossReport:
    """Check every (axiom, measurement) cell for logic/quantum agreement.

    A cell agrees when the Born classification matches the decidability
    forecast, the m = a cell is deterministic at n = b, and every m != a
    cell is uniform. The cell also records how far the Born probabilities
    drift from group-counting multiplicities divided by d; for this function
    family the two are equal.
    """
    d = dim.d
    if d > 31:
        raise ValueError("cross-validation is a desk-scale sweep; d <= 31 required")
    cells = []
    for a in range(d + 1):
        for b in range(d):
            axiom = Proposition.of(a, b, dim)
            state = prepare(axiom)
            for m in range(d + 1):
                dist = born(state, m)
                observed = observed_behavior(dist.probabilities, d, tol)
                predicted = predicted_behavior(axiom, m)
                multiplicities = outcome_multiplicities(axiom, m)
                deviation = max(
                    abs(dist.probabilities[n] - multiplicities[n] / d)
                    for n in range(d)
                )
                if m == a:
                    expected = Behavior.deterministic(b)
                else:
                    expected = Behavior.uniform()
                agree = observed == predicted == expected
                cells.append(
                    CrossCell(axiom, m, predicted, observed, agree, float(deviation))
                )
    return CrossReport(dim, tol, tuple(cells))
