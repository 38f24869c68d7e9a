# Copyright (C) 2024 Nice Zombies
"""Exact arithmetic tests."""
from __future__ import annotations

__all__: list[str] = []

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from effalg import (
    QQ, CycloElement, CycloField, Poly, RatFuncField,
    UnsupportedConductorError, cyclo_inverse, cyclotomic, has_primitive_root,
    parse_poly, parse_rational, poly_gcd, poly_xgcd, resultant,
)

_fractions = st.builds(Fraction, st.integers(-99, 99), st.integers(1, 20))
_FIELD_15: CycloField = CycloField(15)
_cyclo_elements = st.lists(_fractions, min_size=8, max_size=8).map(
    lambda coeffs: _FIELD_15(Poly(coeffs)),
)
_int_polys = st.builds(
    lambda rest, lead: [*rest, lead],
    st.lists(st.integers(-5, 5), min_size=1, max_size=3),
    st.sampled_from([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]),
)


def _sympy_poly(coeffs: list[int]) -> sympy.Expr:
    x: sympy.Symbol = sympy.Symbol("x")
    return sum(coef * x ** i for i, coef in enumerate(coeffs))


@pytest.mark.parametrize(("value", "expected"), [
    (Fraction(1, 2), Fraction(1, 2)), (3, Fraction(3)),
    ("-3/7", Fraction(-3, 7)),
])
def test_rational_field(value: object, expected: Fraction) -> None:
    """Test converting to rationals."""
    assert QQ(value) == expected


def test_rational_field_rejects_floats() -> None:
    """Test that floats aren't exact."""
    with pytest.raises(TypeError, match="rational"):
        QQ(0.5)


@pytest.mark.parametrize(("text", "expected"), [
    ("x^2 + x + 1", "x^2 + x + 1"),
    ("1 + x^2 + x", "x^2 + x + 1"),
    ("2x - 3*x^2", "-3*x^2 + 2*x"),
    ("-3/7*x^3 - x + 2", "-3/7*x^3 - x + 2"),
    ("x + x", "2*x"),
    ("x - x", "0"),
])
def test_parse_and_format_poly(text: str, expected: str) -> None:
    """Test the textual notation for polynomials."""
    assert parse_poly(text).format() == expected


@pytest.mark.parametrize("text", ["", "x^", "y + 1", "x ** 2", "1/0"])
def test_parse_invalid_poly(text: str) -> None:
    """Test malformed polynomials."""
    with pytest.raises(ValueError, match="Invalid|Empty"):
        parse_poly(text)


@pytest.mark.parametrize("text", ["1/0", "abc", ""])
def test_parse_invalid_rational(text: str) -> None:
    """Test malformed rational literals."""
    with pytest.raises(ValueError, match="Invalid rational"):
        parse_rational(text)


def test_poly_arithmetic() -> None:
    """Test polynomial arithmetic."""
    f: Poly = parse_poly("x^3 - 2*x + 1")
    g: Poly = parse_poly("x - 1")
    quotient, remainder = divmod(f, g)
    assert quotient == parse_poly("x^2 + x - 1")
    assert not remainder
    assert f.derivative() == parse_poly("3*x^2 - 2")
    assert g ** 3 == parse_poly("x^3 - 3*x^2 + 3*x - 1")
    assert f.compose(parse_poly("x + 1")) == parse_poly("x^3 + 3*x^2 + x")
    assert f(Fraction(1, 2)) == Fraction(1, 8)
    assert (2 * g).monic() == g


@pytest.mark.parametrize("coeffs", [[], [5], [Fraction(-1, 3)]])
def test_compose_constant(coeffs: list[Fraction]) -> None:
    """Test that composing a constant gives a polynomial."""
    constant: Poly = Poly(coeffs)
    cube: Poly = Poly.monomial(3)
    assert isinstance(constant.compose(cube), Poly)
    assert constant.compose(cube) == constant
    assert constant(cube) == constant


def test_compose_over_rational_functions() -> None:
    """Test composing polynomials with rational function coefficients."""
    field: RatFuncField = RatFuncField()
    constant: Poly = Poly([field.gen + 1], field)
    square: Poly = Poly.monomial(2, 1, field)
    assert isinstance(constant.compose(square), Poly)
    assert constant.compose(square) == constant
    linear: Poly = Poly([field.zero, field.gen], field)
    assert linear(square) == Poly([0, 0, field.gen], field)


def test_poly_division_by_zero() -> None:
    """Test dividing by the zero polynomial."""
    with pytest.raises(ZeroDivisionError):
        divmod(parse_poly("x"), Poly())


def test_poly_negative_power() -> None:
    """Test that polynomials have no inverses."""
    with pytest.raises(ValueError, match="natural"):
        parse_poly("x") ** -1


def test_squarefree() -> None:
    """Test the squarefree part."""
    f: Poly = parse_poly("x - 1") ** 3 * parse_poly("x + 2") ** 2
    assert f.squarefree() == parse_poly("x^2 + x - 2")


@given(_int_polys, _int_polys)
@settings(max_examples=50, deadline=None)
def test_xgcd(a: list[int], b: list[int]) -> None:
    """Test the extended Euclidean algorithm."""
    f, g = Poly(a), Poly(b)
    common, s, t = poly_xgcd(f, g)
    assert s * f + t * g == common
    assert common == poly_gcd(f, g)
    assert not f % common
    assert not g % common


@pytest.mark.parametrize("conductor", [1, 3, 5, 15, 21, 105])
def test_cyclotomic_matches_sympy(conductor: int) -> None:
    """Test cyclotomic polynomials against sympy."""
    x: sympy.Symbol = sympy.Symbol("x")
    expected: list[sympy.Integer] = sympy.Poly(
        sympy.cyclotomic_poly(conductor, x), x,
    ).all_coeffs()
    assert cyclotomic(conductor).coeffs == tuple(
        Fraction(int(coef)) for coef in reversed(expected)
    )


@pytest.mark.parametrize("conductor", [0, -3, 2, 6, 9, 45])
def test_unsupported_conductor(conductor: int) -> None:
    """Test conductors outside squarefree odd numbers."""
    with pytest.raises(UnsupportedConductorError) as exc_info:
        cyclotomic(conductor)

    assert exc_info.value.conductor == conductor


@pytest.mark.parametrize(("f", "g", "expected"), [
    ("x - 2", "x - 5", 3),
    ("x^2 - 2", "x^2 - 3", 1),
    ("x^2 + 1", "x - 1", 2),
    ("x^2 - 1", "x - 1", 0),
    ("3", "x^2 + 1", 9),
])
def test_resultant(f: str, g: str, expected: int) -> None:
    """Test resultants of small polynomials."""
    assert resultant(parse_poly(f), parse_poly(g)) == expected


@given(_int_polys, _int_polys)
@settings(max_examples=50, deadline=None)
def test_resultant_matches_sympy(a: list[int], b: list[int]) -> None:
    """Test resultants against sympy with the arguments swapped."""
    x: sympy.Symbol = sympy.Symbol("x")
    expected: sympy.Expr = sympy.resultant(_sympy_poly(b), _sympy_poly(a), x)
    assert resultant(Poly(a), Poly(b)) == Fraction(int(expected))


@given(_int_polys, _int_polys)
@settings(max_examples=50, deadline=None)
def test_resultant_antisymmetry(a: list[int], b: list[int]) -> None:
    """Test swapping the arguments of a resultant."""
    m, n = len(a) - 1, len(b) - 1
    assert resultant(Poly(a), Poly(b)) == (-1) ** (m * n) * resultant(
        Poly(b), Poly(a),
    )


def test_resultant_of_zero() -> None:
    """Test that the zero polynomial has no resultant."""
    with pytest.raises(ValueError, match="zero polynomial"):
        resultant(Poly(), parse_poly("x"))


@given(_cyclo_elements, _cyclo_elements, _cyclo_elements)
@settings(max_examples=30, deadline=None)
def test_cyclotomic_field_laws(a: CycloElement, b: CycloElement,
                               c: CycloElement) -> None:
    """Test the ring laws in a cyclotomic field."""
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@given(_cyclo_elements)
@settings(max_examples=30, deadline=None)
def test_cyclotomic_inverse(a: CycloElement) -> None:
    """Test inverting nonzero elements."""
    if not a:
        with pytest.raises(ZeroDivisionError):
            cyclo_inverse(a)
    else:
        assert a * cyclo_inverse(a) == 1
        assert a / a == _FIELD_15.one


@pytest.mark.parametrize(("conductor", "order"), [
    (3, 3), (15, 3), (15, 5), (15, 15), (21, 7),
])
def test_primitive_root(conductor: int, order: int) -> None:
    """Test roots of unity of an order dividing the conductor."""
    field: CycloField = CycloField(conductor)
    root: CycloElement | None = field.primitive_root(order)
    assert root is not None
    assert root ** order == 1
    assert all(root ** k != 1 for k in range(1, order))


def test_no_primitive_root() -> None:
    """Test orders not dividing the conductor."""
    assert CycloField(15).primitive_root(7) is None
    assert CycloField(15).primitive_root(0) is None


def test_embed_and_automorphism() -> None:
    """Test embeddings between cyclotomic fields and automorphisms."""
    small: CycloField = CycloField(3)
    large: CycloField = CycloField(15)
    image: CycloElement = small.embed(small.gen, large)
    assert image ** 3 == 1
    assert image == large.primitive_root(3)
    conjugate = small.automorphism(2)
    assert conjugate(small.gen) == small.gen ** 2
    assert conjugate(conjugate(small.gen)) == small.gen
    with pytest.raises(ValueError, match="embed"):
        large.embed(large.gen, small)

    with pytest.raises(ValueError, match="coprime"):
        large.automorphism(5)


def test_mixing_cyclotomic_fields() -> None:
    """Test that elements of different fields don't mix."""
    with pytest.raises(TypeError, match="mix"):
        CycloField(3).gen + CycloField(5).gen  # noqa: B018


@pytest.mark.parametrize(("q", "conductor", "expected"), [
    (3, 3, True), (3, 5, False), (5, 15, True), (7, 15, False), (3, 1, False),
])
def test_has_primitive_root(q: int, conductor: int, expected: bool) -> None:
    """Test deciding roots of cyclotomic polynomials of primes."""
    assert has_primitive_root(q, conductor) == expected


@pytest.mark.parametrize("q", [2, 4, 9, 1])
def test_has_primitive_root_invalid_prime(q: int) -> None:
    """Test that only odd primes are accepted."""
    with pytest.raises(ValueError, match="odd prime"):
        has_primitive_root(q, 15)


def test_rational_functions() -> None:
    """Test arithmetic in a rational function field."""
    field: RatFuncField = RatFuncField()
    t = field.gen
    value = (t ** 2 - 1) / (t - 1)
    assert value == t + 1
    assert str(value) == "t + 1"
    assert str(1 / (t + 1)) == "(1)/(t + 1)"
    assert (t / 2) * 2 == t
    assert (1 / t)(Fraction(1, 3)) == 3
    assert (t - t) == field.zero
    with pytest.raises(ZeroDivisionError):
        field.zero.inverse()


@given(st.lists(_fractions, min_size=1, max_size=3),
       st.lists(_fractions, min_size=1, max_size=3),
       st.lists(_fractions, min_size=1, max_size=3))
@settings(max_examples=30, deadline=None)
def test_rational_function_laws(a: list[Fraction], b: list[Fraction],
                                c: list[Fraction]) -> None:
    """Test the field laws for rational functions."""
    field: RatFuncField = RatFuncField()
    f, g, h = field(Poly(a)), field(Poly(b)), field(Poly(c))
    if h:
        f, g = f / h, g * h

    assert f + g == g + f
    assert f * (g + h) == f * g + f * h
    assert (f - g) + g == f
    if g:
        assert f / g * g == f
