# Copyright (C) 2024 Nice Zombies
"""Exact arithmetic over the rationals and shipped extension fields."""
from __future__ import annotations

__all__: list[str] = [
    "QQ",
    "CycloElement",
    "CycloField",
    "Poly",
    "RatFunc",
    "RatFuncField",
    "RationalField",
    "UnsupportedConductorError",
    "cyclo_inverse",
    "cyclotomic",
    "has_primitive_root",
    "parse_poly",
    "parse_rational",
    "poly_gcd",
    "poly_xgcd",
    "resultant",
]

import re
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd as int_gcd
from typing import TYPE_CHECKING, Any

from sympy import Poly as SymPoly
from sympy import Rational, Symbol, cyclotomic_poly, factorint, isprime

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable
    from re import Match

    _MatchFunc = Callable[[str], Match[str] | None]

_match_term: _MatchFunc = re.compile(
    r"""
    (?P<sign>[+-]?)
    (?P<coef>\d+(?:/\d+)?)?
    (?:\*?(?P<var>[a-zA-Z]\w*)(?:\^(?P<exp>\d+))?)?
    """, re.VERBOSE,
).fullmatch


class UnsupportedConductorError(ValueError):
    """A conductor that isn't a squarefree product of odd primes.

    :param conductor: the rejected conductor
    """

    def __init__(self, conductor: int) -> None:
        """Create a new unsupported conductor error."""
        super().__init__(
            f"Conductor {conductor} is not a squarefree product of odd "
            "primes",
        )
        self.conductor: int = conductor


UnsupportedConductorError.__module__ = "effalg"


class RationalField:
    """The field of rational numbers, with :class:`~fractions.Fraction`."""

    zero: Fraction = Fraction(0)
    one: Fraction = Fraction(1)

    def __call__(self, value: Any) -> Fraction:
        """Convert to a rational number."""
        if isinstance(value, Fraction):
            return value

        if isinstance(value, (int, str)):
            return Fraction(value)

        msg: str = f"Can't convert {value!r} to a rational number"
        raise TypeError(msg)

    def __repr__(self) -> str:
        """Get the representation."""
        return "QQ"


RationalField.__module__ = "effalg"
QQ: RationalField = RationalField()
_X: Symbol = Symbol("x")


def _to_sympy(poly: Poly) -> SymPoly:
    rep: list[Rational] = [
        Rational(coef.numerator, coef.denominator)
        for coef in reversed(poly.coeffs)
    ]
    return SymPoly(rep or [0], _X, domain="QQ")


def _from_sympy(poly: SymPoly) -> Poly:
    return Poly(Fraction(int(coef.p), int(coef.q))
                for coef in reversed(poly.all_coeffs()))


def _over_rationals(*polys: Poly) -> bool:
    return all(isinstance(poly.domain, RationalField) for poly in polys)


def _format_coef(coef: Any) -> str:
    text: str = str(coef)
    if isinstance(coef, (int, Fraction)):
        return text

    return f"({text})"


class Poly:
    """A dense univariate polynomial over a field.

    :param coeffs: the coefficients, constant term first
    :param domain: the coefficient field
    """

    __slots__: tuple[str, ...] = ("coeffs", "domain")

    def __init__(self, coeffs: Iterable[Any] = (), domain: Any = QQ) -> None:
        """Create a new polynomial."""
        items: list[Any] = [domain(coef) for coef in coeffs]
        while items and not items[-1]:
            items.pop()

        self.coeffs: tuple[Any, ...] = tuple(items)
        self.domain: Any = domain

    @classmethod
    def _make(cls, coeffs: list[Any], domain: Any) -> Poly:
        while coeffs and not coeffs[-1]:
            coeffs.pop()

        poly: Poly = cls.__new__(cls)
        poly.coeffs = tuple(coeffs)
        poly.domain = domain
        return poly

    @classmethod
    def gen(cls, domain: Any = QQ) -> Poly:
        """Get the variable ``x``."""
        return cls._make([domain.zero, domain.one], domain)

    @classmethod
    def monomial(cls, degree: int, coef: Any = 1, domain: Any = QQ) -> Poly:
        """Get ``coef * x^degree``."""
        return cls._make([domain.zero] * degree + [domain(coef)], domain)

    @property
    def degree(self) -> int:
        """The degree, ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Any:
        """The leading coefficient."""
        if not self.coeffs:
            return self.domain.zero

        return self.coeffs[-1]

    def __bool__(self) -> bool:
        """Check if nonzero."""
        return bool(self.coeffs)

    def __len__(self) -> int:
        """Get the number of coefficients."""
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Any:
        """Get a coefficient, zero beyond the degree."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]

        return self.domain.zero

    def _coerce(self, other: Any) -> Poly:
        if isinstance(other, Poly):
            if other.domain != self.domain:
                msg: str = f"Can't mix {self.domain!r} and {other.domain!r}"
                raise TypeError(msg)

            return other

        return Poly([other], self.domain)

    def __eq__(self, other: object) -> bool:
        """Check equality."""
        if not isinstance(other, Poly):
            if self.degree <= 0:
                return self[0] == other

            return NotImplemented

        return self.domain == other.domain and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        """Get the hash, matching the field for constants."""
        if self.degree <= 0:
            return hash(self[0])

        return hash(self.coeffs)

    def __neg__(self) -> Poly:
        """Negate."""
        return Poly._make([-coef for coef in self.coeffs], self.domain)

    def __add__(self, other: Any) -> Poly:
        """Add."""
        other = self._coerce(other)
        size: int = max(len(self.coeffs), len(other.coeffs))
        return Poly._make(
            [self[i] + other[i] for i in range(size)], self.domain,
        )

    __radd__ = __add__

    def __sub__(self, other: Any) -> Poly:
        """Subtract."""
        return self + -self._coerce(other)

    def __rsub__(self, other: Any) -> Poly:
        """Subtract from a scalar."""
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> Poly:
        """Multiply."""
        if not isinstance(other, Poly):
            scalar: Any = self.domain(other)
            return Poly._make(
                [coef * scalar for coef in self.coeffs], self.domain,
            )

        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly._make([], self.domain)

        if _over_rationals(self):
            return _from_sympy(_to_sympy(self) * _to_sympy(other))

        result: list[Any] = [self.domain.zero] * (
            len(self.coeffs) + len(other.coeffs) - 1
        )
        for i, a in enumerate(self.coeffs):
            if not a:
                continue

            for j, b in enumerate(other.coeffs):
                result[i + j] += a * b

        return Poly._make(result, self.domain)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        """Raise to a natural power."""
        if exponent < 0:
            msg: str = "Polynomials only have natural powers"
            raise ValueError(msg)

        if _over_rationals(self):
            return _from_sympy(_to_sympy(self) ** exponent)

        result: Poly = Poly._make([self.domain.one], self.domain)
        base: Poly = self
        while exponent:
            if exponent & 1:
                result *= base

            base *= base
            exponent >>= 1

        return result

    def __divmod__(self, other: Any) -> tuple[Poly, Poly]:
        """Divide with remainder."""
        other = self._coerce(other)
        if not other:
            msg: str = "polynomial division by zero"
            raise ZeroDivisionError(msg)

        if _over_rationals(self):
            quo, rem = _to_sympy(self).div(_to_sympy(other))
            return _from_sympy(quo), _from_sympy(rem)

        remainder: list[Any] = list(self.coeffs)
        shift: int = len(remainder) - len(other.coeffs)
        if shift < 0:
            return Poly._make([], self.domain), self

        quotient: list[Any] = [self.domain.zero] * (shift + 1)
        lead: Any = other.lc
        for i in range(shift, -1, -1):
            coef: Any = remainder[i + other.degree] / lead
            quotient[i] = coef
            if not coef:
                continue

            for j, b in enumerate(other.coeffs):
                remainder[i + j] -= coef * b

        return (
            Poly._make(quotient, self.domain),
            Poly._make(remainder[:other.degree], self.domain),
        )

    def __floordiv__(self, other: Any) -> Poly:
        """Divide, dropping the remainder."""
        return divmod(self, other)[0]

    def __mod__(self, other: Any) -> Poly:
        """Get the remainder."""
        return divmod(self, other)[1]

    def __call__(self, value: Any) -> Any:
        """Evaluate with Horner's scheme."""
        if isinstance(value, Poly):
            return self.compose(value)

        if not self.coeffs:
            return self.domain.zero

        result: Any = self.coeffs[-1]
        for coef in reversed(self.coeffs[:-1]):
            result = result * value + coef

        return result

    def derivative(self) -> Poly:
        """Get the formal derivative."""
        return Poly._make(
            [coef * i for i, coef in enumerate(self.coeffs) if i],
            self.domain,
        )

    def monic(self) -> Poly:
        """Divide by the leading coefficient."""
        if not self.coeffs:
            return self

        lead: Any = self.lc
        return Poly._make([coef / lead for coef in self.coeffs], self.domain)

    def compose(self, inner: Poly) -> Poly:
        """Substitute a polynomial for the variable."""
        inner = self._coerce(inner)
        if _over_rationals(self):
            return _from_sympy(_to_sympy(self).compose(_to_sympy(inner)))

        result: Poly = Poly._make(list(self.coeffs[-1:]), self.domain)
        for coef in reversed(self.coeffs[:-1]):
            result = result * inner + coef

        return result

    def map_coefficients(self, func: Callable[[Any], Any], domain: Any,
                         ) -> Poly:
        """Apply a function to every coefficient."""
        return Poly([func(coef) for coef in self.coeffs], domain)

    def squarefree(self) -> Poly:
        """Get the monic squarefree part."""
        if self.degree <= 0:
            return self.monic()

        if _over_rationals(self):
            return _from_sympy(_to_sympy(self).sqf_part()).monic()

        return (self // poly_gcd(self, self.derivative())).monic()

    def format(self, var: str = "x") -> str:
        """Format in the textual notation, e.g. ``x^2 + x + 1``."""
        if not self.coeffs:
            return "0"

        terms: list[str] = []
        for i in range(self.degree, -1, -1):
            coef: Any = self.coeffs[i]
            if not coef:
                continue

            sign: str = "+"
            if isinstance(coef, (int, Fraction)) and coef < 0:
                sign, coef = "-", -coef

            power: str = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            if not power:
                body: str = _format_coef(coef)
            elif coef == 1:
                body = power
            else:
                body = f"{_format_coef(coef)}*{power}"

            terms.append(f"{sign} {body}")

        text: str = " ".join(terms)
        if text.startswith("+ "):
            return text[2:]

        return "-" + text[2:]

    def __str__(self) -> str:
        """Convert to string."""
        return self.format()

    def __repr__(self) -> str:
        """Get the representation."""
        return f"Poly({self.format()!r}, {self.domain!r})"


Poly.__module__ = "effalg"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Get the monic greatest common divisor."""
    if _over_rationals(a, b):
        return _from_sympy(_to_sympy(a).gcd(_to_sympy(b))).monic()

    while b:
        a, b = b, a % b

    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Get ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` the monic gcd."""
    one: Poly = Poly._make([a.domain.one], a.domain)
    zero: Poly = Poly._make([], a.domain)
    if not a and not b:
        return zero, one, zero

    if not b:
        return a.monic(), one * (1 / a.lc), zero

    if not a:
        return b.monic(), zero, one * (1 / b.lc)

    if _over_rationals(a, b):
        s, t, common = _to_sympy(a).gcdex(_to_sympy(b))
        return _from_sympy(common), _from_sympy(s), _from_sympy(t)

    old_r, r = a, b
    old_s, s = one, zero
    old_t, t = zero, one
    while r:
        quotient, remainder = divmod(old_r, r)
        old_r, r = r, remainder
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t

    lead: Any = old_r.lc
    return old_r.monic(), old_s * (1 / lead), old_t * (1 / lead)


def _standard_resultant(a: Poly, b: Poly) -> Any:
    # lc(a)^deg(b) times the product of b over the roots of a
    domain: Any = a.domain
    result: Any = domain.one
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return result * b.lc ** m

        if m == 0:
            return result * a.lc ** n

        if m < n:
            if m * n % 2:
                result = -result

            a, b = b, a
            continue

        remainder: Poly = a % b
        if not remainder:
            return domain.zero

        if m * n % 2:
            result = -result

        result *= b.lc ** (m - remainder.degree)
        a, b = b, remainder


def resultant(f: Poly, g: Poly) -> Any:
    """Get the resultant of two polynomials.

    The sign convention is ``lc(g)^deg(f)`` times the product of ``f`` over
    the roots of ``g``, so ``resultant(x - a, x - b) == b - a``.

    :param f: a nonzero polynomial
    :param g: a nonzero polynomial over the same field
    :raises ValueError: for a zero polynomial
    :return: the resultant, zero iff ``f`` and ``g`` share a root

    Example:
        >>> from effalg import parse_poly, resultant
        >>> resultant(parse_poly("x^2 - 2"), parse_poly("x^2 - 3"))
        Fraction(1, 1)

    """
    if not f or not g:
        msg: str = "The resultant of the zero polynomial is undefined"
        raise ValueError(msg)

    if f.degree == 0:
        return f.lc ** g.degree

    if g.degree == 0:
        return g.lc ** f.degree

    if _over_rationals(f, g):
        value: Rational = _to_sympy(g).resultant(_to_sympy(f))
        return Fraction(int(value.p), int(value.q))

    return _standard_resultant(g, f)


def _check_conductor(conductor: int) -> None:
    if conductor < 1 or conductor % 2 == 0:
        raise UnsupportedConductorError(conductor)

    if any(exponent > 1 for exponent in factorint(conductor).values()):
        raise UnsupportedConductorError(conductor)


@lru_cache(maxsize=None)
def _cyclotomic(conductor: int) -> Poly:
    return _from_sympy(cyclotomic_poly(conductor, _X, polys=True))


def cyclotomic(conductor: int) -> Poly:
    """Get the cyclotomic polynomial of a squarefree odd conductor.

    :param conductor: a squarefree product of odd primes, or ``1``
    :raises UnsupportedConductorError: for even or non-squarefree input
    :return: the cyclotomic polynomial over the rationals

    Example:
        >>> from effalg import cyclotomic
        >>> str(cyclotomic(15))
        'x^8 - x^7 + x^5 - x^4 + x^3 - x + 1'

    """
    _check_conductor(conductor)
    return _cyclotomic(conductor)


class CycloField:
    """The cyclotomic field of a squarefree odd conductor.

    :param conductor: a squarefree product of odd primes, or ``1`` for the
                      rationals
    :raises UnsupportedConductorError: for even or non-squarefree input
    """

    def __init__(self, conductor: int) -> None:
        """Create a new cyclotomic field."""
        self.conductor: int = conductor
        self.modulus: Poly = cyclotomic(conductor)
        self.degree: int = self.modulus.degree
        self.zero: CycloElement = CycloElement(self, Poly())
        self.one: CycloElement = CycloElement(self, Poly([1]))

    def __eq__(self, other: object) -> bool:
        """Check equality."""
        if not isinstance(other, CycloField):
            return NotImplemented

        return self.conductor == other.conductor

    def __hash__(self) -> int:
        """Get the hash."""
        return hash(("CycloField", self.conductor))

    def __repr__(self) -> str:
        """Get the representation."""
        return f"CycloField({self.conductor})"

    def __call__(self, value: Any) -> CycloElement:
        """Convert to an element."""
        if isinstance(value, CycloElement):
            if value.field != self:
                msg: str = f"{value!r} is not in {self!r}"
                raise TypeError(msg)

            return value

        if isinstance(value, Poly):
            return CycloElement(self, value % self.modulus)

        return CycloElement(self, Poly([QQ(value)]))

    @property
    def gen(self) -> CycloElement:
        """A primitive root of unity of order the conductor."""
        return self(Poly.gen())

    def primitive_root(self, order: int) -> CycloElement | None:
        """Get a primitive root of unity of an order dividing the conductor.

        :param order: the order
        :return: the root, or ``None`` if the field has none
        """
        if order < 1 or self.conductor % order:
            return None

        return self(Poly.monomial(self.conductor // order))

    def embed(self, element: CycloElement, target: CycloField,
              ) -> CycloElement:
        """Embed into a cyclotomic field whose conductor is a multiple."""
        if target.conductor % self.conductor:
            msg: str = f"{self!r} doesn't embed into {target!r}"
            raise ValueError(msg)

        if target == self:
            return element

        power: Poly = Poly.monomial(target.conductor // self.conductor)
        return target(self(element).poly.compose(power))

    def automorphism(self, k: int) -> Callable[[CycloElement], CycloElement]:
        """Get the Galois automorphism sending the generator to its power.

        :param k: an exponent coprime to the conductor
        :return: the automorphism
        """
        if int_gcd(k, self.conductor) != 1:
            msg: str = f"{k} is not coprime to {self.conductor}"
            raise ValueError(msg)

        power: Poly = Poly.monomial(k % self.conductor)

        def apply(element: CycloElement) -> CycloElement:
            return self(self(element).poly.compose(power))

        return apply


CycloField.__module__ = "effalg"


class CycloElement:
    """An element of a cyclotomic field, reduced modulo its modulus.

    :param field: the field
    :param poly: a reduced polynomial representative
    """

    __slots__: tuple[str, ...] = ("field", "poly")

    def __init__(self, field: CycloField, poly: Poly) -> None:
        """Create a new element."""
        self.field: CycloField = field
        self.poly: Poly = poly

    def _coerce(self, other: Any) -> CycloElement:
        if isinstance(other, CycloElement):
            if other.field != self.field:
                msg: str = f"Can't mix {self.field!r} and {other.field!r}"
                raise TypeError(msg)

            return other

        if isinstance(other, (int, Fraction)):
            return CycloElement(self.field, Poly([other]))

        return NotImplemented

    def __bool__(self) -> bool:
        """Check if nonzero."""
        return bool(self.poly)

    def __eq__(self, other: object) -> bool:
        """Check equality."""
        coerced: Any = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented

        return self.poly == coerced.poly

    def __hash__(self) -> int:
        """Get the hash, matching rationals for rational elements."""
        if self.poly.degree <= 0:
            return hash(self.poly[0])

        return hash(self.poly.coeffs)

    def __neg__(self) -> CycloElement:
        """Negate."""
        return CycloElement(self.field, -self.poly)

    def __add__(self, other: Any) -> CycloElement:
        """Add."""
        coerced: Any = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented

        return CycloElement(self.field, self.poly + coerced.poly)

    __radd__ = __add__

    def __sub__(self, other: Any) -> CycloElement:
        """Subtract."""
        coerced: Any = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented

        return CycloElement(self.field, self.poly - coerced.poly)

    def __rsub__(self, other: Any) -> CycloElement:
        """Subtract from a rational."""
        return -self + other

    def __mul__(self, other: Any) -> CycloElement:
        """Multiply."""
        coerced: Any = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented

        return CycloElement(
            self.field, self.poly * coerced.poly % self.field.modulus,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> CycloElement:
        """Divide."""
        coerced: Any = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented

        return self * cyclo_inverse(coerced)

    def __rtruediv__(self, other: Any) -> CycloElement:
        """Divide a rational."""
        return cyclo_inverse(self) * other

    def __pow__(self, exponent: int) -> CycloElement:
        """Raise to an integer power."""
        if exponent < 0:
            return cyclo_inverse(self) ** -exponent

        result: CycloElement = self.field.one
        base: CycloElement = self
        while exponent:
            if exponent & 1:
                result *= base

            base *= base
            exponent >>= 1

        return result

    def __str__(self) -> str:
        """Convert to string, ``z`` being the generator."""
        return self.poly.format("z")

    def __repr__(self) -> str:
        """Get the representation."""
        return f"CycloElement({self.field!r}, {self.poly.format('z')!r})"


CycloElement.__module__ = "effalg"


def cyclo_inverse(element: CycloElement) -> CycloElement:
    """Invert a nonzero element of a cyclotomic field.

    :param element: a nonzero element
    :raises ZeroDivisionError: for zero
    :return: the inverse modulo the cyclotomic polynomial

    Example:
        >>> from effalg import CycloField, cyclo_inverse
        >>> field = CycloField(3)
        >>> str(cyclo_inverse(field.gen))
        '-z - 1'

    """
    if not element:
        msg: str = "inverse of zero in a cyclotomic field"
        raise ZeroDivisionError(msg)

    field: CycloField = element.field
    inverse: SymPoly = _to_sympy(element.poly).invert(
        _to_sympy(field.modulus),
    )
    return CycloElement(field, _from_sympy(inverse))


def has_primitive_root(q: int, conductor: int) -> bool:
    """Check if the cyclotomic polynomial of an odd prime has a root.

    :param q: an odd prime
    :param conductor: a valid conductor
    :raises ValueError: if ``q`` is not an odd prime
    :raises UnsupportedConductorError: for an invalid conductor
    :return: whether the field of that conductor has a primitive ``q``-th
             root of unity
    """
    if q == 2 or not isprime(q):
        msg: str = f"{q} is not an odd prime"
        raise ValueError(msg)

    _check_conductor(conductor)
    return conductor % q == 0


class RatFuncField:
    """The field of rational functions in one variable over a base field.

    :param base: the base field
    :param var: the name of the variable
    """

    def __init__(self, base: Any = QQ, var: str = "t") -> None:
        """Create a new rational function field."""
        self.base: Any = base
        self.var: str = var

    @cached_property
    def zero(self) -> RatFunc:
        """The zero function."""
        return RatFunc(self, Poly([], self.base), Poly([1], self.base))

    @cached_property
    def one(self) -> RatFunc:
        """The constant function one."""
        return RatFunc(self, Poly([1], self.base), Poly([1], self.base))

    def __eq__(self, other: object) -> bool:
        """Check equality."""
        if not isinstance(other, RatFuncField):
            return NotImplemented

        return self.base == other.base and self.var == other.var

    def __hash__(self) -> int:
        """Get the hash."""
        return hash(("RatFuncField", self.base, self.var))

    def __repr__(self) -> str:
        """Get the representation."""
        return f"RatFuncField({self.base!r}, {self.var!r})"

    def __call__(self, value: Any) -> RatFunc:
        """Convert to a rational function."""
        if isinstance(value, RatFunc):
            if value.field != self:
                msg: str = f"{value!r} is not in {self!r}"
                raise TypeError(msg)

            return value

        if isinstance(value, Poly):
            if value.domain != self.base:
                msg = f"{value!r} is not over {self.base!r}"
                raise TypeError(msg)

            return RatFunc(self, value, Poly([1], self.base))

        return RatFunc(self, Poly([value], self.base), Poly([1], self.base))

    @property
    def gen(self) -> RatFunc:
        """The variable."""
        return self(Poly.gen(self.base))

    def quotient(self, num: Poly, den: Poly) -> RatFunc:
        """Get ``num / den`` in normal form."""
        return RatFunc.normalized(self, num, den)


RatFuncField.__module__ = "effalg"


class RatFunc:
    """A rational function with a monic denominator coprime to its numerator.

    :param field: the rational function field
    :param num: the numerator
    :param den: the denominator, already normalized
    """

    __slots__: tuple[str, ...] = ("den", "field", "num")

    def __init__(self, field: RatFuncField, num: Poly, den: Poly) -> None:
        """Create a new rational function from a normal form."""
        self.field: RatFuncField = field
        self.num: Poly = num
        self.den: Poly = den

    @classmethod
    def normalized(cls, field: RatFuncField, num: Poly, den: Poly) -> RatFunc:
        """Bring ``num / den`` into normal form."""
        if not den:
            msg: str = "rational function with zero denominator"
            raise ZeroDivisionError(msg)

        if not num:
            return field.zero

        common: Poly = poly_gcd(num, den)
        if common.degree > 0:
            num, den = num // common, den // common

        lead: Any = den.lc
        return cls(field, num * (1 / lead), den.monic())

    def _coerce(self, other: Any) -> RatFunc:
        if isinstance(other, RatFunc):
            if other.field != self.field:
                msg: str = f"Can't mix {self.field!r} and {other.field!r}"
                raise TypeError(msg)

            return other

        try:
            return self.field(other)
        except TypeError:
            return NotImplemented

    def __bool__(self) -> bool:
        """Check if nonzero."""
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        """Check equality."""
        coerced: Any = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented

        return self.num == coerced.num and self.den == coerced.den

    def __hash__(self) -> int:
        """Get the hash, matching the base field for constants."""
        if self.num.degree <= 0 and self.den.degree == 0:
            return hash(self.num[0])

        return hash((self.num, self.den))

    def __neg__(self) -> RatFunc:
        """Negate."""
        return RatFunc(self.field, -self.num, self.den)

    def __add__(self, other: Any) -> RatFunc:
        """Add."""
        coerced: Any = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented

        if self.den == coerced.den:
            return RatFunc.normalized(
                self.field, self.num + coerced.num, self.den,
            )

        return RatFunc.normalized(
            self.field, self.num * coerced.den + coerced.num * self.den,
            self.den * coerced.den,
        )

    __radd__ = __add__

    def __sub__(self, other: Any) -> RatFunc:
        """Subtract."""
        coerced: Any = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented

        return self + -coerced

    def __rsub__(self, other: Any) -> RatFunc:
        """Subtract from a constant."""
        return -self + other

    def __mul__(self, other: Any) -> RatFunc:
        """Multiply."""
        coerced: Any = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented

        return RatFunc.normalized(
            self.field, self.num * coerced.num, self.den * coerced.den,
        )

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        """Invert."""
        if not self.num:
            msg: str = "inverse of the zero rational function"
            raise ZeroDivisionError(msg)

        return RatFunc.normalized(self.field, self.den, self.num)

    def __truediv__(self, other: Any) -> RatFunc:
        """Divide."""
        coerced: Any = self._coerce(other)
        if coerced is NotImplemented:
            return NotImplemented

        return self * coerced.inverse()

    def __rtruediv__(self, other: Any) -> RatFunc:
        """Divide a constant."""
        return self.inverse() * other

    def __pow__(self, exponent: int) -> RatFunc:
        """Raise to an integer power."""
        if exponent < 0:
            return self.inverse() ** -exponent

        return RatFunc(self.field, self.num ** exponent, self.den ** exponent)

    def __call__(self, value: Any) -> Any:
        """Evaluate at a point of the base field."""
        return self.num(value) / self.den(value)

    def __str__(self) -> str:
        """Convert to string."""
        var: str = self.field.var
        if self.den.degree == 0:
            return self.num.format(var)

        return f"({self.num.format(var)})/({self.den.format(var)})"

    def __repr__(self) -> str:
        """Get the representation."""
        return f"RatFunc({self!s})"


RatFunc.__module__ = "effalg"


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational literal such as ``"-3/7"``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        msg: str = f"Invalid rational literal {text!r}"
        raise ValueError(msg) from exc


def parse_poly(text: str, var: str = "x") -> Poly:
    """Parse a polynomial over the rationals, e.g. ``"x^2 + x + 1"``.

    :param text: the polynomial
    :param var: the name of the variable
    :raises ValueError: for malformed input
    :return: the polynomial

    Example:
        >>> from effalg import parse_poly
        >>> parse_poly("-3/7*x^3 - x + 2").coeffs
        (Fraction(2, 1), Fraction(-1, 1), Fraction(0, 1), Fraction(-3, 7))

    """
    compact: str = "".join(text.split())
    if not compact:
        msg: str = "Empty polynomial"
        raise ValueError(msg)

    coeffs: dict[int, Fraction] = {}
    for term in re.findall(r"[+-]?[^+-]+", compact):
        match: Match[str] | None = _match_term(term)
        if (
            not match
            or (match["coef"] is None and match["var"] is None)
            or (match["var"] is not None and match["var"] != var)
        ):
            msg = f"Invalid term {term!r} in {text!r}"
            raise ValueError(msg)

        coef: Fraction = parse_rational(match["coef"] or "1")
        if match["sign"] == "-":
            coef = -coef

        if match["var"] is None:
            exponent: int = 0
        else:
            exponent = int(match["exp"] or 1)

        coeffs[exponent] = coeffs.get(exponent, Fraction(0)) + coef

    size: int = max(coeffs) + 1
    return Poly([coeffs.get(i, 0) for i in range(size)])

