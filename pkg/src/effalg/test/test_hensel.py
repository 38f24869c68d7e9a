# Copyright (C) 2024 Nice Zombies
"""Henselization tests."""
from __future__ import annotations

__all__: list[str] = []

from fractions import Fraction
from math import inf
from typing import TYPE_CHECKING, Any

import pytest
import sympy

from effalg import (
    CycloField, HenselElement, NoSimpleRootError, NormalizationError, Poly,
    RatFuncField, Series, cyclotomic_field, format_series, helem_eq,
    hensel_lift, hensel_morphism, henselize, lift_candidates, pure_transcendental,
    residue, v_t,
)
# pylint: disable-next=W0611
from effalg.test import get_rationals  # type: ignore # noqa: F401

if TYPE_CHECKING:
    from collections.abc import Sequence

    from effalg import AlgebraicFieldDiagram, HenselField, RatFunc

_RING: RatFuncField = RatFuncField()
_T: RatFunc = _RING.gen


def _radical(degree: int) -> Poly:
    return Poly([-(1 + _T), *[0] * (degree - 1), 1], _RING)


def _truncated_product(a: Sequence[Any], b: Sequence[Any], n: int,
                       zero: Any) -> list[Any]:
    result: list[Any] = [zero] * n
    for i in range(n):
        for j in range(n - i):
            result[i + j] += a[i] * b[j]

    return result


@pytest.mark.parametrize(("r", "expected"), [
    (_T ** 2 / (1 + _T), 2),
    (1 / _T, -1),
    (_RING.one, 0),
    (_RING.zero, inf),
])
def test_v_t(r: RatFunc, expected: float) -> None:
    """Test the order of vanishing at zero."""
    assert v_t(r) == expected


@pytest.mark.parametrize(("degree", "precision"), [(2, 5), (3, 4), (5, 3)])
def test_hensel_lift_matches_sympy(degree: int, precision: int) -> None:
    """Test lifted roots of ``1 + t`` against sympy series."""
    t: sympy.Symbol = sympy.Symbol("t")
    expansion: sympy.Expr = sympy.series(
        (1 + t) ** sympy.Rational(1, degree), t, 0, precision + 1,
    ).removeO()
    assert hensel_lift(_radical(degree), 1, precision) == [
        Fraction(str(expansion.coeff(t, e))) for e in range(precision + 1)
    ]


def test_hensel_lift_over_cyclotomic_residues() -> None:
    """Test lifting a primitive cube root of unity."""
    field: CycloField = CycloField(3)
    ring: RatFuncField = RatFuncField(field)
    f: Poly = Poly([1 + ring.gen, ring.one, ring.one], ring)
    series: list[Any] = hensel_lift(f, field.gen, 4)
    square: list[Any] = _truncated_product(series, series, 5, field.zero)
    value: list[Any] = [x + y for x, y in zip(square, series)]
    value[0] += 1
    value[1] += 1
    assert all(not coef for coef in value)


def test_hensel_lift_of_a_cubic() -> None:
    """Test lifting the residue root of ``Y^3 + Y + t``."""
    assert hensel_lift(Poly([_T, 1, 0, 1], _RING), 0, 5) == [
        0, -1, 0, 1, 0, -3,
    ]


@pytest.mark.parametrize(("f", "match"), [
    (Poly([_RING.one, _RING(2)], _RING), "monic"),
    (Poly([_RING.zero], _RING), "monic"),
    (Poly([1 / _T, 0, 1], _RING), "negative valuation"),
])
def test_hensel_lift_normalization(f: Poly, match: str) -> None:
    """Test polynomials that aren't monic and integral."""
    with pytest.raises(NormalizationError, match=match):
        hensel_lift(f, 0, 3)


@pytest.mark.parametrize(("f", "root", "match"), [
    (_radical(2), 2, "not a root"),
    (Poly([-_T, 0, 1], _RING), 0, "multiple root"),
])
def test_hensel_lift_no_simple_root(f: Poly, root: int, match: str) -> None:
    """Test residue roots that can't be lifted."""
    with pytest.raises(NoSimpleRootError, match=match):
        hensel_lift(f, root, 3)


@pytest.mark.parametrize(("series", "expected"), [
    ([1, Fraction(-1, 2), 0], "1 - 1/2*t + O(t^3)"),
    (Series(-1, [1, 0, 2], 0), "t^-1 + 2*t + O(t^2)"),
    (Series(2, [-1], 0), "-t^2 + O(t^3)"),
    ([], "O(t^0)"),
])
def test_format_series(series: Series | list[Any], expected: str) -> None:
    """Test formatting truncated series."""
    assert format_series(series) == expected


def test_series_precision() -> None:
    """Test reading beyond the error term."""
    series: Series = Series(0, [1, 2], 0)
    assert series[1] == 2
    assert series[-3] == 0
    with pytest.raises(IndexError, match="beyond"):
        series[2]  # noqa: B018


def test_hensel_element_arithmetic() -> None:
    """Test equality of algebraic series."""
    root: HenselElement = HenselElement.lift(_radical(2), 1)
    assert helem_eq(root * root, HenselElement.rational(1 + _T))
    assert not helem_eq(root, -root)
    assert not helem_eq(root, HenselElement.rational(_RING.one))
    assert str(HenselElement.rational(_T)) == "t"
    assert str(root) == "1 + 1/2*t - 1/8*t^2 + 1/16*t^3 + O(t^4)"


def test_hensel_element_valuation() -> None:
    """Test valuations and residues."""
    root: HenselElement = HenselElement.lift(_radical(2), 1)
    assert root.valuation() == 0
    assert (root * _T).valuation() == 1
    assert (root / _T).valuation() == -1
    assert residue(root) == 1
    assert residue(root / _T) is None


def test_cube_root() -> None:
    """Test the lifted cube root of ``1 + t``."""
    root: HenselElement = HenselElement.lift(_radical(3), 1)
    assert str(root) == "1 + 1/3*t - 1/9*t^2 + 5/81*t^3 + O(t^4)"
    cube: Series = (root * root * root).series(4)
    assert [cube[e] for e in range(4)] == [1, 1, 0, 0]
    assert helem_eq(root, HenselElement.lift(_radical(3), 1))
    assert not helem_eq(root, HenselElement.lift(_radical(2), 1))


@pytest.mark.parametrize(("weight", "expected"), [
    (6, []),
    (7, [((0, 1), (1,))]),
    (8, [
        ((0, 1), (2,)), ((0, 0, 1), (1,)), ((0, 2), (1,)),
        ((0, 1), (1,), ()),
    ]),
])
def test_lift_candidates(weight: int, expected: list[Any]) -> None:
    """Test enumerating the lifted polynomials by weight."""
    assert lift_candidates(weight) == expected


def test_lift_candidates_have_simple_roots() -> None:
    """Test that every candidate has a simple residue root at zero."""
    for weight in range(1, 11):
        for candidate in lift_candidates(weight):
            assert len(candidate) >= 2
            assert candidate[0] and not candidate[0][0]
            assert candidate[1] and candidate[1][0]
            assert all(not codes or codes[-1] for codes in candidate)
            assert len(candidate) + sum(
                code + 1 for codes in candidate for code in codes
            ) == weight


def test_annihilators() -> None:
    """Test polynomials vanishing at algebraic series."""
    root: HenselElement = HenselElement.lift(_radical(2), 1)
    assert (-root).annihilator() == _radical(2)
    assert root.inverse().annihilator() == Poly(
        [-1 / (1 + _T), 0, 1], _RING,
    )
    assert (root + _T).annihilator() == _radical(2).compose(
        Poly([-_T, 1], _RING),
    )


def test_lift_needs_a_simple_root() -> None:
    """Test lifting at a non-root."""
    with pytest.raises(NoSimpleRootError):
        HenselElement.lift(_radical(2), 3)


def test_henselize(rationals: AlgebraicFieldDiagram) -> None:
    """Test the henselization of the rationals."""
    field: HenselField = henselize(rationals)
    assert field.name == "Q(t)^h"
    assert field.valuation(2, 0) == 1
    assert field.residue(2, 0) == 0
    assert field.residue(1, 0) == 1
    assert field.read_op(1, "+", (1, 1)) == 4
    assert field.element(4).value == 2


def test_henselize_beyond_the_first_stages(
    rationals: AlgebraicFieldDiagram,
) -> None:
    """Test products of ``t`` in the henselization."""
    field: HenselField = henselize(rationals)
    square: int | None = field.read_op(2, "*", (2, 2))
    assert square is not None
    assert field.element(square).value == field.ring.gen ** 2
    assert field.valuation(square) == 2
    assert not field.lifted


def test_henselize_lifts_a_cubic(rationals: AlgebraicFieldDiagram) -> None:
    """Test that the henselization contains roots of a cubic."""
    field: HenselField = henselize(rationals)
    field.advance(8)
    ring: RatFuncField = field.ring
    cubic: Poly = Poly([ring.gen, ring.one, ring.zero, ring.one], ring)
    assert [poly.degree for poly in field.lifted] == [2, 2, 2, 2, 3]
    assert field.lifted[0].format("Y") == "Y^2 + Y + (t)"
    assert field.lifted[-1] == cubic
    code: int | None = field.code_of(
        HenselElement.lift(cubic, field.residue_field.zero), 8,
    )
    assert code is not None
    assert field.valuation(code) == 1
    assert field.residue(code) == 0


def test_henselize_needs_an_algebraic_base(
    rationals: AlgebraicFieldDiagram,
) -> None:
    """Test henselizing a transcendental extension."""
    with pytest.raises(TypeError, match="algebraic"):
        henselize(pure_transcendental(rationals))  # type: ignore


def test_hensel_morphism() -> None:
    """Test extending the identity of the base with ``t -> t``."""
    source: HenselField = henselize(cyclotomic_field(1))
    target: HenselField = henselize(cyclotomic_field(1))
    morphism = hensel_morphism(source, lambda code, _: code, target)
    assert morphism(2, 1) == 2
    assert morphism(4, 1) == 4
