# Copyright (C) 2024 Nice Zombies
"""Infinitary sentence tests."""
from __future__ import annotations

__all__: list[str] = []

from typing import TYPE_CHECKING, Any

import pytest

from effalg import (
    And, App, Atom, Const, CountableAnd, CountableOr, Exists, Forall,
    InfSentence, InvalidBasisError, LinearExprSet, Multiple, Or, Power,
    RootFormulaSet, Var, Verdict, cyclotomic_field, eval_bounded,
    format_sentence, pure_transcendental, radical_field, scott_fd, scott_tfab,
    sentence_to_json, sigma_level,
)
# pylint: disable-next=W0611
from effalg.test import (  # type: ignore # noqa: F401
    get_dyadic, get_integers, get_rationals,
)

if TYPE_CHECKING:
    from effalg import (
        AlgebraicFieldDiagram, RadicalFieldDiagram, SubgroupDiagram,
        TranscendentalDiagram,
    )

_A: Var = Var("a")
_E: Const = Const("e")
_RIGHT_UNIT: Atom = Atom(App("+", (_A, _E)), _A)
_CUBE_ROOT_OF_X1: tuple[int, int, tuple[int, ...]] = (3, 1, (1,))


@pytest.mark.parametrize(("verdict", "sound"), [
    (Verdict.TRUE, True),
    (Verdict.FALSE, True),
    (Verdict.TRUE_AT_BOUND, False),
    (Verdict.FALSE_AT_BOUND, False),
    (Verdict.UNKNOWN, False),
])
def test_verdict_sound(verdict: Verdict, sound: bool) -> None:
    """Test which verdicts hold at every bound."""
    assert verdict.sound == sound


@pytest.mark.parametrize(("term", "expected"), [
    (Multiple(2, _A), "2a"),
    (Power(Var("x"), 3), "x^3"),
    (App("-", (_A,)), "-(a)"),
    (App("+", (_A, _E)), "(a + e)"),
])
def test_format_term(term: Any, expected: str) -> None:
    """Test formatting terms."""
    assert str(term) == expected


@pytest.mark.parametrize(("sentence", "witnesses", "expected"), [
    # Checked on every code in range
    (Forall(("a",), _RIGHT_UNIT), 5, Verdict.TRUE_AT_BOUND),
    (Exists(("a",), And((
        Atom(App("+", (_A, _A)), _E), Atom(_A, _E, negated=True),
    ))), 3, Verdict.FALSE_AT_BOUND),

    # Decided by a single code
    (Exists(("a",), Atom(App("-", (_A,)), _A)), 3, Verdict.TRUE),
    (Forall(("a",), Atom(_A, _E)), 3, Verdict.FALSE),

    # Finite combinations
    (And(()), 3, Verdict.TRUE),
    (Or(()), 3, Verdict.FALSE),
    (Or((Atom(_E, _E, negated=True), Atom(_E, _E))), 3, Verdict.TRUE),

    # Computable combinations without children
    (CountableAnd("none", lambda _: []), 3, Verdict.UNKNOWN),
])
def test_eval_bounded(integers: SubgroupDiagram, sentence: InfSentence,
                      witnesses: int, expected: Verdict) -> None:
    """Test evaluating sentences on the integers."""
    assert eval_bounded(sentence, integers, 10, witnesses, 2) == expected


def test_eval_unknown_formula(integers: SubgroupDiagram) -> None:
    """Test evaluating a formula of an unknown kind."""
    with pytest.raises(TypeError, match="Unknown formula"):
        eval_bounded(InfSentence(), integers, 10, 3, 2)


@pytest.mark.parametrize(("sentence", "level"), [
    (_RIGHT_UNIT, 0),
    (Exists(("a",), _RIGHT_UNIT), 1),
    (Forall(("a",), _RIGHT_UNIT), 2),
    (Exists(("a",), Forall(("b",), _RIGHT_UNIT)), 2),
    (Forall(("a",), Exists(("b",), _RIGHT_UNIT)), 3),
    (CountableOr("units", lambda n: [_RIGHT_UNIT] * n), 1),
])
def test_sigma_level(sentence: InfSentence, level: int) -> None:
    """Test the quantifier complexity of sentences."""
    assert sigma_level(sentence) == level


def test_linear_expression_candidates() -> None:
    """Test the order of reduced expressions."""
    assert LinearExprSet.candidates(1, 1) == [(1, 0), (1, 1), (1, -1)]
    assert LinearExprSet.candidates(1, 2)[3:] == [
        (1, 2), (1, -2), (2, 1), (2, -1),
    ]


def test_linear_expressions_of_integers(integers: SubgroupDiagram) -> None:
    """Test that the integers divide only trivially."""
    expressions: LinearExprSet = LinearExprSet(integers, [1], 20)
    assert expressions.members(3) == [
        (1, 0), (1, 1), (1, -1), (1, 2), (1, -2), (1, 3), (1, -3),
    ]


def test_linear_expressions_of_dyadic(dyadic: SubgroupDiagram) -> None:
    """Test halves in the dyadic rationals."""
    expressions: LinearExprSet = LinearExprSet(dyadic, [1], 20)
    assert expressions.members(2) == [
        (1, 0), (1, 1), (1, -1), (1, 2), (1, -2), (2, 1), (2, -1),
    ]


def test_scott_tfab(integers: SubgroupDiagram) -> None:
    """Test the sentence of the integers."""
    sentence: InfSentence = scott_tfab(integers, [1], 10)
    assert sigma_level(sentence) == 3
    text: str = format_sentence(sentence, 1)
    assert "AND[torsion-free]:" in text
    assert "OR[covering]:" in text
    assert sentence_to_json(sentence, 1)["type"] == "and"


def test_scott_tfab_dependent_basis(integers: SubgroupDiagram) -> None:
    """Test a basis with a relation."""
    with pytest.raises(InvalidBasisError) as exc_info:
        scott_tfab(integers, [1, 3], 5)

    assert exc_info.value.basis == (1, 3)
    assert exc_info.value.relation == (2, -1)


def test_root_formulas(rationals: AlgebraicFieldDiagram) -> None:
    """Test the roots of integers among the rationals."""
    formulas: RootFormulaSet = RootFormulaSet(rationals, [], 10)
    assert formulas.members(1) == [(1, 1, ()), (1, -1, ())]
    assert formulas.members(2) == [
        (1, 1, ()), (1, -1, ()), (1, 2, ()), (1, -2, ()), (2, 1, ()),
    ]


def test_root_formulas_of_radical_field() -> None:
    """Test that ``t`` has a cube root in the radical field."""
    field: RadicalFieldDiagram = radical_field([3])
    formulas: RootFormulaSet = RootFormulaSet(field, [2], 24)
    assert formulas.present(_CUBE_ROOT_OF_X1)
    assert _CUBE_ROOT_OF_X1 in formulas.members(3)
    sentence: InfSentence = scott_fd(field, [2], 24)
    lines: list[str] = format_sentence(sentence, 3).splitlines()
    assert "y^3 = x1" in [line.strip() for line in lines]


def test_root_formulas_of_rational_functions() -> None:
    """Test that ``t`` has no cube root in the rational functions."""
    field: TranscendentalDiagram = pure_transcendental(cyclotomic_field(1))
    formulas: RootFormulaSet = RootFormulaSet(field, [2], 10)
    assert not formulas.present(_CUBE_ROOT_OF_X1)
    assert _CUBE_ROOT_OF_X1 not in formulas.members(3)
    sentence: InfSentence = scott_fd(field, [2], 10)
    lines: list[str] = format_sentence(sentence, 3).splitlines()
    assert "y^3 = x1" not in [line.strip() for line in lines]


def test_scott_fd(rationals: AlgebraicFieldDiagram) -> None:
    """Test the sentence of the rationals."""
    sentence: InfSentence = scott_fd(rationals, [], 10)
    assert sigma_level(sentence) == 3
    assert "AND[characteristic-zero]:" in format_sentence(sentence, 2)


def test_scott_fd_dependent_basis(rationals: AlgebraicFieldDiagram) -> None:
    """Test an algebraic element as a transcendence basis."""
    with pytest.raises(InvalidBasisError):
        scott_fd(rationals, [1], 10)


def test_sentence_to_json() -> None:
    """Test converting sentences to JSON trees."""
    sentence: InfSentence = Forall(("a",), CountableAnd(
        "units", lambda n: [_RIGHT_UNIT] * n,
    ))
    assert sentence_to_json(sentence, 1) == {
        "type": "forall",
        "vars": ["a"],
        "body": {
            "type": "countable-and",
            "name": "units",
            "bound": 1,
            "children": [{
                "type": "atom", "lhs": "(a + e)", "rhs": "a",
                "negated": False,
            }],
        },
    }
    with pytest.raises(TypeError, match="Unknown formula"):
        sentence_to_json(InfSentence(), 1)


@pytest.mark.parametrize(("sentence", "expected"), [
    (Forall(("a",), _RIGHT_UNIT), "forall a:\n  (a + e) = a"),
    (And((Atom(_A, Var("b"), negated=True),)), "and:\n  a != b"),
    (CountableAnd("none", lambda _: []), "AND[none]:\n  (none yet)"),
])
def test_format_sentence(sentence: InfSentence, expected: str) -> None:
    """Test pretty printing sentences."""
    assert format_sentence(sentence, 1) == expected
