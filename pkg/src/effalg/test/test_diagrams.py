# Copyright (C) 2024 Nice Zombies
"""Atomic diagram tests."""
from __future__ import annotations

__all__: list[str] = []

from io import StringIO
from typing import TYPE_CHECKING

import pytest
from hypothesis import given
from hypothesis import strategies as st

from effalg import (
    CompositionError, CorruptStreamError, Fact, MalformedFactError, Operator,
    RawDiagram, Relabeling, Signature, Symbol, audit_stream, compose,
    decode_fact, fact_index, join, pair, pair_tuple, pair_with_constant,
    project, read_diagram, relabel, unpair, unpair_tuple, write_diagram,
)
from effalg.signatures import FIELD, GROUP
# pylint: disable-next=W0611
from effalg.test import get_dyadic, get_integers  # type: ignore # noqa: F401

if TYPE_CHECKING:
    from effalg import SubgroupDiagram


@pytest.mark.parametrize(("a", "b", "expected"), [
    (0, 0, 0), (1, 0, 1), (0, 1, 2), (2, 0, 3), (1, 1, 4), (2, 3, 18),
])
def test_pair(a: int, b: int, expected: int) -> None:
    """Test Cantor pairing."""
    assert pair(a, b) == expected


@given(st.integers(0, 10 ** 12), st.integers(0, 10 ** 12))
def test_unpair_inverts_pair(a: int, b: int) -> None:
    """Test that unpairing inverts pairing."""
    assert unpair(pair(a, b)) == (a, b)


@given(st.integers(0, 10 ** 12))
def test_pair_is_surjective(z: int) -> None:
    """Test that every natural is a pair."""
    assert pair(*unpair(z)) == z


@given(st.lists(st.integers(0, 1000), min_size=1, max_size=5))
def test_unpair_tuple(values: list[int]) -> None:
    """Test unpairing tuples."""
    assert unpair_tuple(pair_tuple(values), len(values)) == tuple(values)


@pytest.mark.parametrize(("func", "args"), [
    (pair, (-1, 0)),
    (pair, (0, -1)),
    (unpair, (-1,)),
    (pair_tuple, ((),)),
    (unpair_tuple, (0, 0)),
])
def test_pairing_domain(func: object, args: tuple[int, ...]) -> None:
    """Test pairing outside the naturals."""
    with pytest.raises(ValueError, match="[Cc]antor|empty|positive"):
        func(*args)  # type: ignore


@pytest.mark.parametrize(("fact", "expected"), [
    (("e", (), 0), 0),
    (("+", (0, 0), 0), 1),
    (("-", (0,), 0), 2),
    (("e", (), 1), 3),
])
def test_fact_index(fact: tuple[str, tuple[int, ...], int],
                    expected: int) -> None:
    """Test canonical fact indices."""
    assert fact_index(GROUP, fact) == expected
    assert decode_fact(GROUP, expected) == Fact(*fact)


@given(st.integers(0, 10 ** 6))
def test_decode_fact_inverts_fact_index(index: int) -> None:
    """Test that every index decodes to the fact it indexes."""
    assert fact_index(FIELD, decode_fact(FIELD, index)) == index


@pytest.mark.parametrize("fact", [
    # Unknown symbol
    ("*", (0, 0), 0),

    # Arity mismatch
    ("+", (0,), 0), ("e", (0,), 0),

    # Negative codes
    ("-", (-1,), 0), ("-", (0,), -1),
])
def test_malformed_fact(fact: tuple[str, tuple[int, ...], int]) -> None:
    """Test facts that don't fit the signature."""
    with pytest.raises(MalformedFactError):
        fact_index(GROUP, fact)


@pytest.mark.parametrize(("symbols", "match"), [
    ((), "Empty"),
    ((Symbol("a", 0), Symbol("a", 1)), "Duplicate"),
    ((Symbol("a", -1),), "Negative"),
])
def test_invalid_signature(symbols: tuple[Symbol, ...], match: str) -> None:
    """Test invalid signatures."""
    with pytest.raises(ValueError, match=match):
        Signature("invalid", symbols)


def test_read_op(integers: SubgroupDiagram) -> None:
    """Test reading operations stage by stage."""
    assert integers.read_op(0, "e") == 0
    assert integers.read_op(0, "-", (1,)) is None
    assert integers.read_op(1, "-", (1,)) == 2
    assert integers.read_op(1, "+", (1, 1)) == 3


def test_read_op_is_monotone(integers: SubgroupDiagram) -> None:
    """Test that committed answers are readable at later stages."""
    assert integers.read_op(4, "+", (1, 1)) == 3
    assert integers.read_op(1, "+", (1, 1)) == 3
    assert integers.read_op(0, "+", (1, 1)) is None


@pytest.mark.parametrize(("sym", "args"), [("*", (0, 0)), ("+", (0,))])
def test_read_op_malformed(integers: SubgroupDiagram, sym: str,
                           args: tuple[int, ...]) -> None:
    """Test reading malformed queries."""
    with pytest.raises(MalformedFactError):
        integers.read_op(0, sym, args)


def test_bit(integers: SubgroupDiagram) -> None:
    """Test the three-valued atomic diagram."""
    index: int = fact_index(GROUP, ("-", (1,), 2))
    assert integers.bit(0, index) is None
    assert integers.bit(1, index) == 1
    assert integers.bit(1, fact_index(GROUP, ("-", (1,), 0))) == 0


def test_relabel(integers: SubgroupDiagram) -> None:
    """Test a permuted copy."""
    swapped = relabel(integers, Relabeling([1, 0]))
    assert swapped.read_op(0, "e") == 1
    assert swapped.read_op(1, "+", (0, 0)) == 3
    assert swapped.read_op(1, "-", (0,)) == 2


def test_relabeling_group() -> None:
    """Test inverting and composing relabelings."""
    cycle: Relabeling = Relabeling([1, 2, 0])
    assert [cycle.inverse()(code) for code in range(4)] == [2, 0, 1, 3]
    assert [cycle.then(cycle.inverse())(code) for code in range(3)] == [
        0, 1, 2,
    ]


def test_invalid_relabeling() -> None:
    """Test images that aren't a permutation."""
    with pytest.raises(ValueError, match="permutation"):
        Relabeling([0, 0])


def test_join(integers: SubgroupDiagram, dyadic: SubgroupDiagram) -> None:
    """Test joining and projecting streams."""
    joined = join([integers, dyadic])
    index: int = fact_index(GROUP, ("+", (1, 1), 3))
    assert joined.bit(2, pair(1, index)) == dyadic.bit(2, index)
    assert project(joined, 0).read_op(1, "-", (1,)) == 2
    with pytest.raises(IndexError):
        joined.component(2)


def test_compose() -> None:
    """Test composing operators."""
    double: Operator = Operator(lambda n: 2 * n, None, None, "double")
    assert compose(double, double)(3) == 12
    assert compose(double, Operator.identity(None)).name == "double.identity"


def test_compose_mismatch() -> None:
    """Test composing operators whose signatures don't match."""
    to_group: Operator = Operator(lambda _: None, None, GROUP)
    on_fields: Operator = Operator.identity(FIELD)
    with pytest.raises(CompositionError):
        compose(on_fields, to_group)


def test_pair_with_constant(integers: SubgroupDiagram,
                            dyadic: SubgroupDiagram) -> None:
    """Test pairing with a fixed structure."""
    operator: Operator = pair_with_constant(
        integers, Operator(lambda _: dyadic, None, GROUP),
    )
    assert operator(None).component(1) is dyadic
    with pytest.raises(CompositionError):
        pair_with_constant(integers, Operator.identity(FIELD))


def test_audit_stream(dyadic: SubgroupDiagram) -> None:
    """Test a clean audit."""
    assert not audit_stream(dyadic, range(5))


def test_write_and_read_diagram(integers: SubgroupDiagram) -> None:
    """Test replaying a written diagram."""
    for raw in (False, True):
        fp: StringIO = StringIO()
        count: int = write_diagram(integers, 2, fp, raw=raw)
        lines: list[str] = fp.getvalue().splitlines()
        assert len(lines) == count
        replay: RawDiagram = read_diagram(lines, GROUP)
        assert replay.read_op(2, "+", (1, 1)) == 3
        assert not audit_stream(replay, range(3))


@pytest.mark.parametrize("line", [
    "not json",
    '{"stage": 0}',
    '{"stage": 0, "fact": {"sym": "e", "args": [], "res": 0}, "bit": 3}',
])
def test_read_malformed_diagram(line: str) -> None:
    """Test reading malformed diagram records."""
    with pytest.raises(MalformedFactError):
        read_diagram([line], GROUP)


def test_contradictory_raw_diagram() -> None:
    """Test replaying contradictory commitments."""
    zero: int = fact_index(GROUP, ("e", (), 0))
    one: int = fact_index(GROUP, ("e", (), 1))
    with pytest.raises(CorruptStreamError):
        RawDiagram(GROUP, [(0, zero, 1), (1, one, 1)]).read_op(1, "e")

    with pytest.raises(CorruptStreamError):
        RawDiagram(GROUP, [(0, zero, 1), (1, zero, 0)]).read_op(1, "e")

    with pytest.raises(CorruptStreamError):
        RawDiagram(GROUP, [(0, zero, 0), (1, zero, 1)]).read_op(1, "e")


def test_invalid_raw_event() -> None:
    """Test an event that isn't a bit."""
    with pytest.raises(MalformedFactError):
        RawDiagram(GROUP, [(0, 0, 2)])
