# Copyright (C) 2024 Nice Zombies
"""Sigma-3 reduction tests."""
from __future__ import annotations

__all__: list[str] = []

from fractions import Fraction

import pytest

from effalg import (
    AuditReport, BitStream, Chip, ChipScheduler, Sigma3Reduction,
    Sigma3Relation, SequencingError, TripleMachine, audit_invariants,
    constant_relation, e0_relation, naive_oracle, nth_prime, owner,
    reduce_sigma3, triple_prime,
)


def _same_streams() -> Sigma3Reduction:
    return Sigma3Reduction([BitStream(), BitStream()], e0_relation())


def test_triple_prime() -> None:
    """Test the primes reserved for triples."""
    assert [triple_prime(0, 1, k) for k in range(3)] == [2, 5, 13]
    assert owner(13) == (0, 1, 2)
    assert owner(triple_prime(2, 5, 1)) == (2, 5, 1)


@pytest.mark.parametrize("triple", [(1, 1, 0), (2, 1, 0), (0, 1, -1)])
def test_invalid_triple(triple: tuple[int, int, int]) -> None:
    """Test triples without a prime."""
    with pytest.raises(ValueError, match="Invalid triple"):
        triple_prime(*triple)


def test_relation_use() -> None:
    """Test reading a bit beyond the declared use."""
    relation: Sigma3Relation = Sigma3Relation(
        lambda a, b, *_: a(3) == b(3), lambda *_: 2, "peek",
    )
    with pytest.raises(ValueError, match="exceeds the declared use"):
        relation.holds(BitStream(), BitStream(), 0, 0, 0)


def test_e0_relation() -> None:
    """Test the matrix of eventual equality."""
    relation: Sigma3Relation = e0_relation()
    a, b = BitStream.parse("0"), BitStream.parse("(1)")
    assert relation.holds(a, b, 1, 1, 0)
    assert not relation.holds(a, b, 0, 1, 0)
    assert relation.name == "e0"


@pytest.mark.parametrize(("value", "name"), [
    (True, "const-true"), (False, "const-false"),
])
def test_constant_relation(value: bool, name: str) -> None:  # noqa: FBT001
    """Test the trivial relations."""
    relation: Sigma3Relation = constant_relation(value)
    assert relation.holds(BitStream(), BitStream(), 0, 0, 0) == value
    assert relation.name == name


def test_chips() -> None:
    """Test the chips awarded at the first stages."""
    scheduler: ChipScheduler = _same_streams().scheduler
    assert [scheduler.chip(stage) for stage in (0, 1, 2, 5)] == [
        Chip(0, 1, 0), Chip(1, 2, 0), Chip(0, 1, 1), Chip(0, 1, 1),
    ]
    assert scheduler.count(0, 1, 0, 15) == 2
    assert scheduler.count(0, 1, 1, 15) == 2


def test_chips_keep_coming() -> None:
    """Test that a witnessed pair awards a value again and again."""
    scheduler: ChipScheduler = _same_streams().scheduler
    assert scheduler.count(0, 1, 0, 500) > scheduler.count(0, 1, 0, 15)


def test_key_exponent_grows() -> None:
    """Test promotions by chips of the triple."""
    reduction: Sigma3Reduction = _same_streams()
    assert reduction.key_exponents((0, 1, 0), [1, 14, 15]) == [
        (1, 2), (14, 2), (15, 3),
    ]


def test_triple_machine() -> None:
    """Test the negative powers before any chip."""
    scheduler: ChipScheduler = ChipScheduler(
        [BitStream(), BitStream()], constant_relation(False),
    )
    machine: TripleMachine = TripleMachine(0, 1, 0, scheduler)
    assert repr(machine) == "TripleMachine(0, 1, 0)"
    assert machine.prime == 2
    assert not machine.promoted
    assert [machine.rank(l) for l in range(4)] == [0, 1, 4, 5]
    assert machine.exponent(1) == 1
    assert machine.exponent(0) == 0
    assert machine.admits(1, 1)
    assert not machine.admits(0, 1)
    assert not machine.admits(5, 1)
    machine.advance(1)
    assert machine.r == 2
    assert machine.admits(1, 2)
    assert not machine.admits(0, 2)
    assert machine.admits(0, 1)
    assert machine.admits(5, 2)
    assert not machine.admits(1, 2, stage=0)


def test_sequencing() -> None:
    """Test skipping a stage."""
    machine: TripleMachine = TripleMachine(
        0, 1, 0, _same_streams().scheduler,
    )
    with pytest.raises(SequencingError) as exc_info:
        machine.step(1)

    assert exc_info.value.expected == 0
    assert exc_info.value.stage == 1


def test_membership() -> None:
    """Test rationals in the groups of the family."""
    reduction: Sigma3Reduction = Sigma3Reduction([], constant_relation(False))
    assert reduction.membership(1, Fraction(1, 2), 0)
    assert not reduction.membership(0, Fraction(1, 2), 0)
    assert reduction.membership(0, 3, 0)
    assert reduction.membership(1, Fraction(1, 4), 1)
    assert not reduction.membership(1, Fraction(1, 8), 1)


def test_audit() -> None:
    """Test auditing machines at increasing stages."""
    reduction: Sigma3Reduction = _same_streams()
    report: AuditReport = audit_invariants(
        reduction, range(0, 30, 5), [(0, 1, 0), (0, 1, 1)],
    )
    assert report.checked == 12
    assert report.clean


def test_audit_corrupted_tags() -> None:
    """Test auditing a machine with m on the side of n."""
    reduction: Sigma3Reduction = _same_streams()
    reduction.machine(0, 1, 0, 5).tags[0] = True
    report: AuditReport = audit_invariants(reduction, [5], [(0, 1, 0)])
    assert not report.clean
    assert any("same side" in violation for violation in report.violations)


def test_naive_oracle() -> None:
    """Test the machines against the construction on finite sets."""
    family: list[BitStream] = [
        BitStream.parse(text) for text in ("0", "(1)", "1")
    ]
    reduction: Sigma3Reduction = Sigma3Reduction(family, e0_relation())
    oracle: dict[int, set[Fraction]] = naive_oracle(
        reduction.scheduler, 40, 3, 30,
    )
    primes: list[int] = [nth_prime(n) for n in range(10)]
    for l in range(4):  # noqa: E741
        assert oracle[l] == {
            Fraction(1, p ** e) for p in primes
            for e in range(1, reduction.machine(*owner(p), 40).r + 2)
            if reduction.admits(l, p, e, 40)
        }


def test_reduce_sigma3() -> None:
    """Test the family sizes of reductions."""
    reduction, _ = reduce_sigma3([BitStream(), BitStream()], e0_relation())
    assert reduction.size == 2
    reduction, _ = reduce_sigma3(lambda _: BitStream(), e0_relation())
    assert reduction.size is None
