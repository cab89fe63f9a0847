"""Partition combinatorics and brute-force decidability.

The enumeration oracle used here filters all_functions() by the defining
relation directly, independent of the constructive group() loop.
"""

import itertools

import pytest

from mublogic.logic import (
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
from mublogic.modmath import Dimension

PRIMES = [2, 3, 5, 7]

D3 = Dimension(3)

# table transcription for d = 3: rows a = 0..3, cells b = 0..2, pairs (f0, f1)
TABLE_D3 = [
    [[(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 1), (2, 1)], [(0, 2), (1, 2), (2, 2)]],
    [[(0, 0), (1, 1), (2, 2)], [(0, 1), (1, 2), (2, 0)], [(0, 2), (1, 0), (2, 1)]],
    [[(0, 0), (1, 2), (2, 1)], [(0, 1), (1, 0), (2, 2)], [(0, 2), (1, 1), (2, 0)]],
    [[(0, 0), (0, 1), (0, 2)], [(1, 0), (1, 1), (1, 2)], [(2, 0), (2, 1), (2, 2)]],
]


def enumerate_group(p: Proposition) -> set[tuple[int, int]]:
    """Oracle: filter the full enumeration by the defining relation."""
    d = p.dim.d
    members = set()
    for f0 in range(d):
        for f1 in range(d):
            if p.a < d:
                ok = f1 == (p.a * f0 + p.b.value) % d
            else:
                ok = f0 == p.b.value
            if ok:
                members.add((f0, f1))
    return members


def pairs(functions) -> list[tuple[int, int]]:
    return [f.pair for f in functions]


def test_holds_table_cells():
    assert holds(BinaryFunction.from_values(0, 1, D3), Proposition.of(0, 1, D3))
    assert holds(BinaryFunction.from_values(1, 2, D3), Proposition.of(1, 1, D3))
    assert holds(BinaryFunction.from_values(2, 0, D3), Proposition.of(3, 2, D3))
    assert not holds(BinaryFunction.from_values(0, 0, D3), Proposition.of(0, 1, D3))


def test_group_printed_cells():
    assert pairs(group(Proposition.of(2, 1, D3))) == [(0, 1), (1, 0), (2, 2)]
    assert pairs(group(Proposition.of(3, 0, D3))) == [(0, 0), (0, 1), (0, 2)]
    d2 = Dimension(2)
    assert pairs(group(Proposition.of(0, 0, d2))) == [(0, 0), (1, 0)]


@pytest.mark.parametrize("d", PRIMES)
def test_group_matches_enumeration_oracle(d):
    dim = Dimension(d)
    for a in range(d + 1):
        for b in range(d):
            p = Proposition.of(a, b, dim)
            members = group(p)
            assert {f.pair for f in members} == enumerate_group(p)
            assert all(holds(f, p) for f in members)
            # construction order: ascending f0 for linear rows, f1 for the pin row
            key = 0 if a < d else 1
            order = [f.pair[key] for f in members]
            assert order == sorted(order)


def test_partition_table_d3_matches_transcription():
    table = partition_table(D3)
    rendered = [[pairs(cell) for cell in row] for row in table]
    assert rendered == TABLE_D3


def test_partition_table_d2_shape():
    table = partition_table(Dimension(2))
    assert len(table) == 3
    for row in table:
        assert len(row) == 2
        assert all(len(cell) == 2 for cell in row)
        seen = sorted(f.pair for cell in row for f in cell)
        assert seen == sorted((x, y) for x in range(2) for y in range(2))


@pytest.mark.parametrize("d", PRIMES)
def test_each_row_partitions_all_functions(d):
    dim = Dimension(d)
    everything = {f.pair for f in all_functions(dim)}
    assert len(everything) == d * d
    for row in partition_table(dim):
        seen = [f.pair for cell in row for f in cell]
        assert len(seen) == d * d
        assert set(seen) == everything


@pytest.mark.parametrize("d", PRIMES)
def test_cross_partition_intersections_are_singletons(d):
    dim = Dimension(d)
    for a, m in itertools.combinations(range(d + 1), 2):
        for b in range(d):
            for n in range(d):
                common = intersect(Proposition.of(a, b, dim), Proposition.of(m, n, dim))
                assert len(common) == 1


@pytest.mark.parametrize("d", PRIMES)
def test_same_partition_groups_disjoint(d):
    dim = Dimension(d)
    for a in range(d + 1):
        for b, b2 in itertools.combinations(range(d), 2):
            assert intersect(Proposition.of(a, b, dim), Proposition.of(a, b2, dim)) == ()


def test_intersect_examples():
    p, q = Proposition.of(1, 1, D3), Proposition.of(2, 0, D3)
    assert pairs(intersect(p, q)) == [(1, 2)]
    assert set(intersect(p, p)) == set(group(p))
    assert intersect(p, Proposition.of(1, 2, D3)) == ()


def test_decide_examples():
    axiom = Proposition.of(1, 1, D3)
    assert decide(axiom, axiom) is Decidability.PROVABLY_TRUE
    assert decide(axiom, Proposition.of(1, 2, D3)) is Decidability.PROVABLY_FALSE
    assert decide(axiom, Proposition.of(2, 0, D3)) is Decidability.UNDECIDABLE


@pytest.mark.parametrize("d", [2, 3, 5])
def test_decide_trichotomy(d):
    dim = Dimension(d)
    props = [Proposition.of(a, b, dim) for a in range(d + 1) for b in range(d)]
    for axiom in props:
        for theorem in props:
            verdict = decide(axiom, theorem)
            if theorem.a == axiom.a:
                expected = (
                    Decidability.PROVABLY_TRUE
                    if theorem.b == axiom.b
                    else Decidability.PROVABLY_FALSE
                )
            else:
                expected = Decidability.UNDECIDABLE
            assert verdict is expected, (axiom, theorem)
            # decide agrees with intersection cardinality
            size = len(intersect(axiom, theorem))
            assert (verdict is Decidability.PROVABLY_TRUE) == (size == d)
            assert (verdict is Decidability.PROVABLY_FALSE) == (size == 0)


def test_outcome_multiplicities_examples():
    axiom = Proposition.of(1, 1, D3)
    assert outcome_multiplicities(axiom, 1) == {0: 0, 1: 3, 2: 0}
    assert outcome_multiplicities(axiom, 2) == {0: 1, 1: 1, 2: 1}
    assert outcome_multiplicities(Proposition.of(3, 0, D3), 0) == {0: 1, 1: 1, 2: 1}


@pytest.mark.parametrize("d", [2, 3, 5])
def test_outcome_multiplicities_point_or_flat(d):
    dim = Dimension(d)
    for a in range(d + 1):
        for b in range(d):
            axiom = Proposition.of(a, b, dim)
            for m in range(d + 1):
                counts = outcome_multiplicities(axiom, m)
                assert sum(counts.values()) == d
                if m == a:
                    assert counts == {n: (d if n == b else 0) for n in range(d)}
                else:
                    assert counts == {n: 1 for n in range(d)}
