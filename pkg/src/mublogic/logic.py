"""Combinatorics of d-valent functions of a single binary argument.

The d**2 functions f: {0,1} -> Z_d split d+1 ways into d groups of d
functions each. A group collects the functions satisfying one proposition:
either a linear relation "f(1) = a f(0) + b" (partitions a = 0..d-1) or a
value pin "f(0) = b" (partition a = d). Whether one proposition is provable
from another is settled here by exhaustive enumeration, which also serves
as the independent oracle for the quantum layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .modmath import Dimension, DimensionMismatch, Residue


class Decidability(Enum):
    PROVABLY_TRUE = "ProvablyTrue"
    PROVABLY_FALSE = "ProvablyFalse"
    UNDECIDABLE = "Undecidable"


@dataclass(frozen=True)
class BinaryFunction:
    """A function {0,1} -> Z_d stored as the value pair (f(0), f(1))."""

    f0: Residue
    f1: Residue

    def __post_init__(self) -> None:
        if self.f0.dim != self.f1.dim:
            raise DimensionMismatch("f(0) and f(1) must share one modulus")

    @classmethod
    def from_values(cls, f0: int, f1: int, dim: Dimension) -> "BinaryFunction":
        return cls(Residue(f0, dim), Residue(f1, dim))

    @property
    def dim(self) -> Dimension:
        return self.f0.dim

    @property
    def pair(self) -> tuple[int, int]:
        return (self.f0.value, self.f1.value)


@dataclass(frozen=True)
class Proposition:
    """Either "f(1) = a f(0) + b" for a < d, or "f(0) = b" for a = d.

    Doubles as an axiom label, a theorem label, and a measurement-outcome
    label {m, n}.
    """

    a: int
    b: Residue

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or isinstance(self.a, bool):
            raise TypeError(f"partition index must be an int, got {self.a!r}")
        if not 0 <= self.a <= self.b.dim.d:
            raise ValueError(
                f"partition index {self.a} out of range [0, {self.b.dim.d}]"
            )

    @classmethod
    def of(cls, a: int, b: int, dim: Dimension) -> "Proposition":
        return cls(a, Residue(b, dim))

    @property
    def dim(self) -> Dimension:
        return self.b.dim


def all_functions(dim: Dimension) -> tuple[BinaryFunction, ...]:
    """All d**2 functions, ordered by (f(0), f(1))."""
    return tuple(
        BinaryFunction.from_values(f0, f1, dim)
        for f0 in range(dim.d)
        for f1 in range(dim.d)
    )


def holds(f: BinaryFunction, p: Proposition) -> bool:
    """Does f satisfy proposition p?"""
    if f.dim != p.dim:
        raise DimensionMismatch("function and proposition moduli differ")
    d = p.dim.d
    if p.a < d:
        return f.f1.value == (p.a * f.f0.value + p.b.value) % d
    return f.f0.value == p.b.value


def group(p: Proposition) -> tuple[BinaryFunction, ...]:
    """The d functions satisfying p, in construction order.

    Linear rows vary f(0) ascending; the value-pin row varies f(1) ascending.
    """
    d = p.dim.d
    if p.a < d:
        return tuple(
            BinaryFunction.from_values(f0, (p.a * f0 + p.b.value) % d, p.dim)
            for f0 in range(d)
        )
    return tuple(
        BinaryFunction.from_values(p.b.value, f1, p.dim) for f1 in range(d)
    )


def partition_table(dim: Dimension) -> tuple[tuple[tuple[BinaryFunction, ...], ...], ...]:
    """(d+1) x d table of groups; rows indexed by a, columns by b."""
    return tuple(
        tuple(group(Proposition.of(a, b, dim)) for b in range(dim.d))
        for a in range(dim.d + 1)
    )


def intersect(p: Proposition, q: Proposition) -> tuple[BinaryFunction, ...]:
    """Functions satisfying both propositions, ordered by (f(0), f(1))."""
    if p.dim != q.dim:
        raise DimensionMismatch("proposition moduli differ")
    common = set(group(p)) & set(group(q))
    return tuple(sorted(common, key=lambda f: f.pair))


def decide(axiom: Proposition, theorem: Proposition) -> Decidability:
    """Brute-force decidability of theorem relative to axiom.

    The theorem is provable iff it holds for every function consistent with
    the axiom, refutable iff it holds for none, and undecidable otherwise.
    """
    satisfied = sum(1 for f in group(axiom) if holds(f, theorem))
    if satisfied == axiom.dim.d:
        return Decidability.PROVABLY_TRUE
    if satisfied == 0:
        return Decidability.PROVABLY_FALSE
    return Decidability.UNDECIDABLE


def outcome_multiplicities(axiom: Proposition, m: int) -> dict[int, int]:
    """Count, per outcome n, the axiom-consistent functions satisfying {m, n}.

    Counts always sum to d: each function lies in exactly one group of
    partition m.
    """
    d = axiom.dim.d
    if not 0 <= m <= d:
        raise ValueError(f"measurement index {m} out of range [0, {d}]")
    members = group(axiom)
    return {
        n: sum(1 for f in members if holds(f, Proposition.of(m, n, axiom.dim)))
        for n in range(d)
    }
