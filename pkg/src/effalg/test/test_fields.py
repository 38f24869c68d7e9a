# Copyright (C) 2024 Nice Zombies
"""Field diagram tests."""
from __future__ import annotations

__all__: list[str] = []

from typing import TYPE_CHECKING

import pytest
from hypothesis import given
from hypothesis import strategies as st

from effalg import (
    AlgebraicFieldDiagram, BitStream, CycloField, Enumeration, FieldMorphism,
    MorphismViolationError, NestingViolationError, OnesCount, Poly, RunOfOnes,
    UnsupportedConductorError, cyclotomic_field, evaluate, example_field,
    inf_reduction, integer_constant, integer_polynomial, integer_polynomials,
    odd_primes_product, pi2_reduction, poly_index, pure_transcendental,
    radical_field, root_set_operator, transcendental_morphism,
)
# pylint: disable-next=W0611
from effalg.test import get_rationals  # type: ignore # noqa: F401

if TYPE_CHECKING:
    from effalg import (
        Detector, RadicalFieldDiagram, RootSetApproximation,
        TranscendentalDiagram,
    )


def test_rationals(rationals: AlgebraicFieldDiagram) -> None:
    """Test the closure of the rationals."""
    assert rationals.read_op(0, "0") == 0
    assert rationals.read_op(0, "1") == 1
    assert rationals.read_op(1, "-", (0, 1)) == 2
    assert rationals.read_op(1, "+", (1, 1)) == 3
    assert rationals.element(2) == -1
    assert rationals.element(3) == 2
    assert rationals.read_op(0, "+", (1, 1)) is None


@pytest.mark.parametrize("n", [0, 1, 2, 3, -1, -3])
def test_integer_constant(rationals: AlgebraicFieldDiagram, n: int) -> None:
    """Test naming integers through committed facts."""
    code: int | None = integer_constant(rationals, 10, n)
    assert code is not None
    assert rationals.element(code) == n


def test_evaluate(rationals: AlgebraicFieldDiagram) -> None:
    """Test evaluating integer polynomials."""
    two: int | None = integer_constant(rationals, 10, 2)
    assert two is not None
    value: int | None = evaluate(rationals, (-1, 0, 1), two, 10)
    assert value is not None
    assert rationals.element(value) == 3
    assert evaluate(rationals, (), two, 10) == 0


def test_integer_polynomials() -> None:
    """Test the enumeration of integer polynomials."""
    assert integer_polynomials(3) == [(0, 1), (1, 1), (-1, 1)]
    assert integer_polynomial(3) == (2, 1)
    assert poly_index((1, 1, 1)) > poly_index((2, 1))


@given(st.integers(0, 500))
def test_poly_index_inverts_integer_polynomial(n: int) -> None:
    """Test that every polynomial is indexed once."""
    assert poly_index(integer_polynomial(n)) == n


@pytest.mark.parametrize("coeffs", [(1,), (1, -1), (2, 2), (0, 0)])
def test_poly_index_outside_enumeration(coeffs: tuple[int, ...]) -> None:
    """Test polynomials that aren't enumerated."""
    with pytest.raises(ValueError, match="enumeration"):
        poly_index(coeffs)


def test_odd_primes_product() -> None:
    """Test products of the first odd primes."""
    assert [odd_primes_product(n) for n in range(4)] == [1, 3, 15, 105]


def test_cyclotomic_field_root() -> None:
    """Test a root of unity in a cyclotomic field diagram."""
    field: AlgebraicFieldDiagram = cyclotomic_field(3)
    assert field.element(2, 0) == CycloField(3).gen
    roots: RootSetApproximation = root_set_operator(field)
    assert roots.witness(poly_index((1, 1, 1)), 8) == 2


def test_root_set_of_rationals(rationals: AlgebraicFieldDiagram) -> None:
    """Test the polynomials with a rational root."""
    roots: RootSetApproximation = root_set_operator(rationals)
    assert roots.confirmed(10, 3) == frozenset({0, 1, 2})
    assert roots.witness(poly_index((1, 0, 1)), 10) is None
    assert roots.witness(poly_index((1, 1, 1)), 10) is None


def test_unsupported_cyclotomic_field() -> None:
    """Test conductors without a cyclotomic field."""
    with pytest.raises(UnsupportedConductorError):
        cyclotomic_field(9)


def test_example_field() -> None:
    """Test the field with roots of unity of every odd prime order."""
    field: AlgebraicFieldDiagram = example_field()
    assert field.conductor_at(0) == 1
    assert field.conductor_at(2) == 15
    assert field.code_of(CycloField(3).gen, 2) is not None
    assert field.code_of(CycloField(7).gen, 2) is None


def test_codes_survive_growth() -> None:
    """Test that elements keep their codes when the conductor grows."""
    field: AlgebraicFieldDiagram = example_field()
    root: int | None = field.code_of(CycloField(3).gen, 1)
    assert root is not None
    assert field.code_of(CycloField(3).gen, 2) == root
    assert field.element(root) ** 3 == 1


def test_conductor_must_grow_by_multiples() -> None:
    """Test conductors that don't divide later ones."""
    field: AlgebraicFieldDiagram = AlgebraicFieldDiagram(
        lambda stage: 5 if stage else 3,
    )
    with pytest.raises(ValueError, match="multiple"):
        field.advance(1)


@pytest.mark.parametrize(("enumeration", "stage", "conductor"), [
    (Enumeration.nothing(), 3, 1),
    (Enumeration.finite_set([0]), 1, 3),
    (Enumeration.everything(), 1, 15),
])
def test_inf_reduction(enumeration: Enumeration, stage: int,
                       conductor: int) -> None:
    """Test adjoining a root of unity per enumerated element."""
    assert inf_reduction(enumeration).conductor_at(stage) == conductor


@pytest.mark.parametrize(("stream", "stage", "conductor"), [
    ("(0)", 2, 3),
    ("0(1)", 1, 3),
    ("0(1)", 2, 15),
    ("(1)", 1, 15),
])
def test_pi2_reduction(stream: str, stage: int, conductor: int) -> None:
    """Test adjoining a root of unity per fired detector."""
    field: AlgebraicFieldDiagram = pi2_reduction(
        BitStream.parse(stream), OnesCount,
    )
    assert field.conductor_at(stage) == conductor


def test_nesting_violation() -> None:
    """Test a detector firing before its predecessor."""
    def detectors(index: int) -> Detector:
        return OnesCount(10 ** 6) if index == 1 else RunOfOnes(index)

    field: AlgebraicFieldDiagram = pi2_reduction(
        BitStream.parse("(1)"), detectors,
    )
    with pytest.raises(NestingViolationError) as exc_info:
        field.advance(2)

    assert exc_info.value.index == 2
    assert exc_info.value.stage == 2


def test_radical_field() -> None:
    """Test roots of a transcendental."""
    field: RadicalFieldDiagram = radical_field([3, 5])
    assert field.level_at(0) == 3
    assert field.root_of_t(3, 0) == 3
    assert field.root_of_t(5, 0) is None
    assert field.format_element(2) == "u^3"
    assert field.level_at(1) == 15
    assert field.header() == "level 15: t = u^15"
    assert field.format_element(2) == "u^15"
    assert field.root_of_t(3, 1) == 3


def test_radical_field_keeps_codes() -> None:
    """Test re-embedding elements across three levels."""
    field: RadicalFieldDiagram = radical_field([3, 5, 7])
    assert field.level_at(2) == 105
    assert field.header() == "level 105: t = u^105"
    assert field.format_element(2) == "u^105"
    assert field.root_of_t(3, 2) == 3
    assert field.element(3) == field.field(Poly.monomial(35))
    assert radical_field([3, 5, 7]).root_of_t(7, 1) is None


@pytest.mark.parametrize("primes", [[2], [9], [3, 4]])
def test_unsupported_radical_field(primes: list[int]) -> None:
    """Test roots of even or composite order."""
    with pytest.raises(UnsupportedConductorError):
        radical_field(primes)


def test_pure_transcendental(rationals: AlgebraicFieldDiagram) -> None:
    """Test adjoining a transcendental."""
    field: TranscendentalDiagram = pure_transcendental(rationals)
    assert field.code_of(field.field.gen, 3) == 2
    assert field.element_from([0, 1], stage=3) == field.field.gen
    square: int | None = field.read_op(2, "*", (2, 2))
    assert square is not None
    assert field.element(square) == field.field.gen ** 2
    assert field.name == "Q(t)"


def test_pure_transcendental_at_stage_0() -> None:
    """Test that zero, one and ``t`` are placed at the first stage."""
    field: TranscendentalDiagram = pure_transcendental(cyclotomic_field(1))
    assert field.code_of(field.field.zero, 0) == 0
    assert field.code_of(field.field.one, 0) == 1
    assert field.code_of(field.field.gen, 0) == 2
    assert field.read_op(0, "0") == 0
    assert field.read_op(0, "1") == 1


def test_transcendental_morphism() -> None:
    """Test extending an isomorphism of the bases."""
    source: TranscendentalDiagram = pure_transcendental(cyclotomic_field(1))
    target: TranscendentalDiagram = pure_transcendental(cyclotomic_field(1))
    morphism: FieldMorphism = transcendental_morphism(
        source, lambda code: code, target,
    )
    assert morphism(2, 3) == 2
    assert morphism.check(3, 5) > 0


def test_field_morphism(rationals: AlgebraicFieldDiagram) -> None:
    """Test checking and composing stagewise maps."""
    identity: FieldMorphism = FieldMorphism(
        rationals, rationals, lambda code, _: code, "id",
    )
    assert identity.check(3, 4) > 0
    assert identity.then(identity).name == "id.id"
    assert identity.then(identity)(3, 3) == 3


def test_morphism_violation(rationals: AlgebraicFieldDiagram) -> None:
    """Test a map that swaps zero and one."""
    swap: FieldMorphism = FieldMorphism(
        rationals, rationals, lambda code, _: {0: 1, 1: 0}.get(code, code),
    )
    with pytest.raises(MorphismViolationError):
        swap.check(2, 4)
