# Copyright (C) 2024 Nice Zombies
"""The henselization of a rational function field at ``t = 0``."""
from __future__ import annotations

__all__: list[str] = [
    "HenselElement",
    "HenselField",
    "NoSimpleRootError",
    "NormalizationError",
    "Series",
    "format_series",
    "helem_eq",
    "hensel_lift",
    "hensel_morphism",
    "henselize",
    "lift_candidates",
    "residue",
    "v_t",
]

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import count
from math import inf
from typing import TYPE_CHECKING, Any

from effalg._exact import (
    CycloElement, CycloField, Poly, RatFunc, RatFuncField, resultant,
)
from effalg._fields import (
    AlgebraicFieldDiagram, ClosureStream, FieldMorphism,
    MorphismViolationError,
)

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator, Sequence

    _Candidate = tuple[tuple[int, ...], ...]

logger: logging.Logger = logging.getLogger(__name__)

_MAX_PRECISION: int = 1 << 12


class NoSimpleRootError(ArithmeticError):
    """A residue root that isn't simple, or isn't a root at all."""


class NormalizationError(ValueError):
    """A polynomial that isn't monic with integral coefficients."""


NoSimpleRootError.__module__ = "effalg"
NormalizationError.__module__ = "effalg"


def _order(poly: Poly) -> int:
    return next(i for i, coef in enumerate(poly.coeffs) if coef)


def v_t(r: RatFunc) -> float:
    """Get the order of vanishing at ``t = 0``, ``inf`` for zero.

    Example:
        >>> from effalg import RatFuncField, v_t
        >>> t = RatFuncField().gen
        >>> v_t(t ** 2 / (1 + t)), v_t(1 / t), v_t(t - t)
        (2, -1, inf)

    """
    if not r:
        return inf

    return _order(r.num) - _order(r.den)


def _ps_mul(a: Sequence[Any], b: Sequence[Any], n: int, zero: Any,
            ) -> list[Any]:
    result: list[Any] = [zero] * max(n, 0)
    for i, x in enumerate(a[:n]):
        if not x:
            continue

        for j, y in enumerate(b[:n - i]):
            result[i + j] += x * y

    return result


def _ps_inv(a: Sequence[Any], n: int, zero: Any) -> list[Any]:
    if n <= 0:
        return []

    lead: Any = 1 / a[0]
    result: list[Any] = [lead]
    for k in range(1, n):
        total: Any = zero
        for i in range(1, min(k, len(a) - 1) + 1):
            total += a[i] * result[k - i]

        result.append(-total * lead)

    return result


class Series:
    """A truncated Laurent series ``sum(c_e * t^e) + O(t^precision)``.

    :param start: the exponent of the first coefficient
    :param coeffs: the coefficients from ``start`` on
    :param zero: the zero of the coefficient field
    """

    __slots__: tuple[str, ...] = ("coeffs", "start", "zero")

    def __init__(self, start: int, coeffs: Sequence[Any], zero: Any) -> None:
        """Create a new truncated series."""
        self.start: int = start
        self.coeffs: list[Any] = list(coeffs)
        self.zero: Any = zero

    @property
    def precision(self) -> int:
        """The exponent of the error term."""
        return self.start + len(self.coeffs)

    def __getitem__(self, exponent: int) -> Any:
        """Get a coefficient below the precision."""
        if exponent >= self.precision:
            msg: str = f"t^{exponent} is beyond O(t^{self.precision})"
            raise IndexError(msg)

        if exponent < self.start:
            return self.zero

        return self.coeffs[exponent - self.start]

    def valuation(self) -> int | None:
        """Get the first exponent with a nonzero coefficient, if any."""
        for i, coef in enumerate(self.coeffs):
            if coef:
                return self.start + i

        return None

    def __str__(self) -> str:
        """Convert to string."""
        return format_series(self)


Series.__module__ = "effalg"


def _as_rational(coef: Any) -> Fraction | None:
    if isinstance(coef, (int, Fraction)):
        return Fraction(coef)

    if isinstance(coef, CycloElement) and coef.poly.degree <= 0:
        return Fraction(coef.poly[0])

    return None


def format_series(series: Series | Sequence[Any], var: str = "t") -> str:
    """Format a truncated series, e.g. ``"1 + 1/2*t - 1/8*t^2 + O(t^3)"``.

    :param series: a series, or power series coefficients from ``t^0``
    :param var: the name of the variable
    :return: the text
    """
    if not isinstance(series, Series):
        series = Series(0, series, 0)

    terms: list[str] = []
    for i, coef in enumerate(series.coeffs):
        if not coef:
            continue

        exponent: int = series.start + i
        sign: str = "+"
        rational: Fraction | None = _as_rational(coef)
        if rational is None:
            body: str = f"({coef})"
        else:
            if rational < 0:
                sign, rational = "-", -rational

            body = str(rational)

        if exponent:
            power: str = var if exponent == 1 else f"{var}^{exponent}"
            body = power if body == "1" else f"{body}*{power}"

        terms.append(f"{sign} {body}")

    terms.append(f"+ O({var}^{series.precision})")
    text: str = " ".join(terms)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _rational_series(r: RatFunc, precision: int, zero: Any) -> Series:
    if not r:
        return Series(precision, [], zero)

    a, b = _order(r.num), _order(r.den)
    start: int = a - b
    length: int = max(precision - start, 0)
    inverse: list[Any] = _ps_inv(r.den.coeffs[b:], length, zero)
    return Series(
        start, _ps_mul(r.num.coeffs[a:], inverse, length, zero), zero,
    )


def _power_series(r: RatFunc, length: int, zero: Any) -> list[Any]:
    series: Series = _rational_series(r, length, zero)
    return [series[e] for e in range(length)]


def _ps_eval(coeffs: Sequence[list[Any]], value: list[Any], n: int,
             zero: Any) -> list[Any]:
    result: list[Any] = list(coeffs[-1][:n])
    for coef in reversed(coeffs[:-1]):
        result = _ps_mul(result, value, n, zero)
        result = [x + y for x, y in zip(result, coef)]

    return result


def _check_monic(f: Poly) -> None:
    if f.degree < 1 or f.lc != 1:
        msg: str = f"Expecting a monic polynomial of positive degree: {f}"
        raise NormalizationError(msg)

    for coef in f.coeffs:
        if v_t(coef) < 0:
            msg = f"Coefficient {coef} has a negative valuation"
            raise NormalizationError(msg)


def hensel_lift(f: Poly, a: Any, precision: int) -> list[Any]:
    """Lift a simple residue root to a power series root.

    Newton iteration doubles the precision at every step.

    :param f: a monic polynomial over ``K(t)`` with integral coefficients
    :param a: a simple root of ``f`` at ``t = 0``, in ``K``
    :param precision: the last exponent to compute
    :raises NormalizationError: for a non-monic polynomial or a coefficient
                                with a pole at ``t = 0``
    :raises NoSimpleRootError: when ``a`` isn't a simple root at ``t = 0``
    :return: the coefficients of ``t^0`` up to ``t^precision``

    Example:
        >>> from effalg import Poly, RatFuncField, format_series, hensel_lift
        >>> field = RatFuncField()
        >>> f = Poly([-(1 + field.gen), 0, 1], field)
        >>> format_series(hensel_lift(f, 1, 3))
        '1 + 1/2*t - 1/8*t^2 + 1/16*t^3 + O(t^4)'

    """
    _check_monic(f)
    ring: RatFuncField = f.domain
    base: Any = ring.base
    zero: Any = base.zero
    root: Any = base(a)
    n: int = precision + 1
    coeffs: list[list[Any]] = [_power_series(c, n, zero) for c in f.coeffs]
    derivative: list[list[Any]] = [
        [x * i for x in coef] for i, coef in enumerate(coeffs) if i
    ]
    if _ps_eval(coeffs, [root], 1, zero)[0]:
        msg: str = f"{root} is not a root of {f} at t = 0"
        raise NoSimpleRootError(msg)

    if not _ps_eval(derivative, [root], 1, zero)[0]:
        msg = f"{root} is a multiple root of {f} at t = 0"
        raise NoSimpleRootError(msg)

    series: list[Any] = [root]
    length: int = 1
    while length < n:
        length = min(2 * length, n)
        series += [zero] * (length - len(series))
        value: list[Any] = _ps_eval(coeffs, series, length, zero)
        slope: list[Any] = _ps_eval(derivative, series, length, zero)
        step: list[Any] = _ps_mul(
            value, _ps_inv(slope, length, zero), length, zero,
        )
        series = [x - y for x, y in zip(series, step)]

    return series[:n]


def _interpolate(values: list[Any], ring: RatFuncField) -> Poly:
    # Newton form at the nodes 0, 1, ..., len(values) - 1
    diffs: list[Any] = list(values)
    last: int = len(diffs) - 1
    for j in range(1, last + 1):
        for i in range(last, j - 1, -1):
            diffs[i] = (diffs[i] - diffs[i - 1]) / j

    result: Poly = Poly([diffs[last]], ring)
    for k in range(last - 1, -1, -1):
        result = result * Poly([ring(-k), ring.one], ring) + diffs[k]

    return result


def _strip_zero_root(f: Poly) -> Poly:
    start: int = _order(f)
    return Poly(f.coeffs[start:], f.domain)


def _sum_annihilator(f: Poly, g: Poly) -> Poly:
    ring: RatFuncField = f.domain
    values: list[Any] = []
    for z in range(f.degree * g.degree + 1):
        shifted: Poly = g.compose(Poly([ring(z), ring(-1)], ring))
        values.append(resultant(f, shifted))

    return _interpolate(values, ring)


def _product_annihilator(f: Poly, g: Poly) -> Poly:
    ring: RatFuncField = f.domain
    n: int = g.degree
    values: list[Any] = []
    for z in range(f.degree * n + 1):
        point: RatFunc = ring(z)
        homogenized: Poly = Poly(
            [g[n - j] * point ** (n - j) for j in range(n + 1)], ring,
        )
        values.append(resultant(f, homogenized))

    return _interpolate(values, ring)


class HenselElement:
    """An element of the henselization, algebraic over ``K(t)``.

    Elements are expression trees over rational functions and lifted roots.
    The power series at ``t = 0`` and a squarefree annihilating polynomial
    are computed on demand and cached.

    :param ring: the rational function field ``K(t)``
    :param kind: ``"rational"``, ``"lift"``, ``"add"``, ``"mul"``, ``"neg"``
                 or ``"inv"``
    :param children: the operands
    :param value: the rational function of a rational element
    :param poly: the polynomial of a lift
    :param root: the residue root of a lift
    """

    def __init__(
        self,
        ring: RatFuncField,
        kind: str,
        children: tuple[HenselElement, ...] = (),
        *,
        value: RatFunc | None = None,
        poly: Poly | None = None,
        root: Any = None,
    ) -> None:
        """Create a new henselization element."""
        self.ring: RatFuncField = ring
        self.kind: str = kind
        self.children: tuple[HenselElement, ...] = children
        self.value: RatFunc | None = value
        self.poly: Poly | None = poly
        self.root: Any = root
        self._series: Series | None = None
        self._annihilator: Poly | None = None
        self._valuation: float | None = None

    @classmethod
    def rational(cls, value: RatFunc) -> HenselElement:
        """Get an element of ``K(t)``."""
        return cls(value.field, "rational", value=value)

    @classmethod
    def lift(cls, poly: Poly, root: Any) -> HenselElement:
        """Get the root of ``poly`` lifting a simple residue root.

        :raises NormalizationError: for a non-monic polynomial
        :raises NoSimpleRootError: when the residue root isn't simple
        """
        ring: RatFuncField = poly.domain
        root = ring.base(root)
        hensel_lift(poly, root, 0)
        return cls(ring, "lift", poly=poly, root=root)

    @property
    def zero(self) -> Any:
        """The zero of the residue field."""
        return self.ring.base.zero

    def _coerce(self, other: Any) -> HenselElement:
        if isinstance(other, HenselElement):
            return other

        return HenselElement.rational(self.ring(other))

    def is_rational(self) -> bool:
        """Check if the element is stored as a rational function."""
        return self.kind == "rational"

    def __add__(self, other: Any) -> HenselElement:
        """Add."""
        other = self._coerce(other)
        if self.is_rational() and other.is_rational():
            return HenselElement.rational(self.value + other.value)

        if other.is_rational() and not other.value:
            return self

        if self.is_rational() and not self.value:
            return other

        return HenselElement(self.ring, "add", (self, other))

    __radd__ = __add__

    def __neg__(self) -> HenselElement:
        """Negate."""
        if self.is_rational():
            return HenselElement.rational(-self.value)  # type: ignore

        if self.kind == "neg":
            return self.children[0]

        return HenselElement(self.ring, "neg", (self,))

    def __sub__(self, other: Any) -> HenselElement:
        """Subtract."""
        return self + -self._coerce(other)

    def __rsub__(self, other: Any) -> HenselElement:
        """Subtract from a rational function."""
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> HenselElement:
        """Multiply."""
        other = self._coerce(other)
        if self.is_rational() and other.is_rational():
            return HenselElement.rational(self.value * other.value)

        for a, b in ((self, other), (other, self)):
            if a.is_rational() and not a.value:
                return a

            if a.is_rational() and a.value == 1:
                return b

        return HenselElement(self.ring, "mul", (self, other))

    __rmul__ = __mul__

    def inverse(self) -> HenselElement:
        """Invert a nonzero element."""
        if self.is_rational():
            return HenselElement.rational(self.value.inverse())  # type: ignore

        if self.kind == "inv":
            return self.children[0]

        return HenselElement(self.ring, "inv", (self,))

    def __truediv__(self, other: Any) -> HenselElement:
        """Divide."""
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Any) -> HenselElement:
        """Divide a rational function."""
        return self._coerce(other) * self.inverse()

    def _compute_series(self, precision: int) -> Series:
        zero: Any = self.zero
        if self.kind == "rational":
            return _rational_series(self.value, precision, zero)  # type: ignore

        if self.kind == "lift":
            return Series(0, hensel_lift(
                self.poly, self.root, max(precision, 1) - 1,  # type: ignore
            ), zero)

        if self.kind == "neg":
            series: Series = self.children[0].series(precision)
            return Series(series.start, [-x for x in series.coeffs], zero)

        if self.kind == "add":
            a, b = (child.series(precision) for child in self.children)
            start: int = min(a.start, b.start)
            end: int = min(a.precision, b.precision)
            return Series(
                start, [a[e] + b[e] for e in range(start, end)], zero,
            )

        if self.kind == "mul":
            x, y = self.children
            vx, vy = int(x.valuation()), int(y.valuation())
            a, b = x.series(precision - vy), y.series(precision - vx)
            end = min(a.precision + vy, b.precision + vx)
            return Series(vx + vy, _ps_mul(
                a.coeffs[vx - a.start:], b.coeffs[vy - b.start:],
                end - vx - vy, zero,
            ), zero)

        x, = self.children
        vx = int(x.valuation())
        a = x.series(precision + 2 * vx)
        unit: list[Any] = a.coeffs[vx - a.start:]
        return Series(-vx, _ps_inv(unit, len(unit), zero), zero)

    def series(self, precision: int) -> Series:
        """Get the series at ``t = 0`` up to ``O(t^precision)`` at least."""
        if self._series is not None and self._series.precision >= precision:
            return self._series

        if self._series is not None:
            precision = max(precision, 2 * self._series.precision)

        self._series = self._compute_series(precision)
        return self._series

    def valuation(self) -> float:
        """Get the ``t``-adic valuation, ``inf`` for zero.

        :raises ArithmeticError: when no nonzero coefficient shows up, which
                                 only happens for zero trees
        """
        if self._valuation is not None:
            return self._valuation

        if self.is_rational():
            self._valuation = v_t(self.value)  # type: ignore
            return self._valuation

        precision: int = 1
        while precision <= _MAX_PRECISION:
            if (found := self.series(precision).valuation()) is not None:
                self._valuation = found
                return found

            precision *= 2

        msg: str = f"No nonzero coefficient below t^{_MAX_PRECISION}"
        raise ArithmeticError(msg)

    def annihilator(self) -> Poly:
        """Get a monic squarefree polynomial over ``K(t)`` with this root."""
        if self._annihilator is None:
            self._annihilator = self._compute_annihilator().squarefree()

        return self._annihilator

    def _compute_annihilator(self) -> Poly:
        ring: RatFuncField = self.ring
        if self.kind == "rational":
            return Poly([-self.value, ring.one], ring)  # type: ignore

        if self.kind == "lift":
            return self.poly  # type: ignore

        if self.kind == "neg":
            f: Poly = self.children[0].annihilator()
            return Poly(
                [c if i % 2 == 0 else -c for i, c in enumerate(f.coeffs)],
                ring,
            ).monic()

        if self.kind == "inv":
            f = _strip_zero_root(self.children[0].annihilator())
            return Poly(reversed(f.coeffs), ring).monic()

        x, y = self.children
        if x.is_rational():
            x, y = y, x

        f = x.annihilator()
        if y.is_rational():
            r: RatFunc = y.value  # type: ignore
            if self.kind == "add":
                return f.compose(Poly([-r, ring.one], ring))

            return Poly(
                [c * r ** -i for i, c in enumerate(f.coeffs)], ring,
            ).monic()

        g: Poly = y.annihilator()
        if self.kind == "add":
            return _sum_annihilator(f, g).monic()

        return _product_annihilator(
            _strip_zero_root(f), _strip_zero_root(g),
        ).monic()

    def map(self, function: Callable[[Any], Any], ring: RatFuncField,
            ) -> HenselElement:
        """Apply a map of residue fields to every coefficient.

        :raises NoSimpleRootError: when a lifted root stops being simple
        """
        def convert(r: RatFunc) -> RatFunc:
            return ring.quotient(
                r.num.map_coefficients(function, ring.base),
                r.den.map_coefficients(function, ring.base),
            )

        if self.kind == "rational":
            return HenselElement.rational(convert(self.value))  # type: ignore

        if self.kind == "lift":
            return HenselElement.lift(
                self.poly.map_coefficients(convert, ring),  # type: ignore
                function(self.root),
            )

        return HenselElement(ring, self.kind, tuple(
            child.map(function, ring) for child in self.children
        ))

    def __str__(self) -> str:
        """Convert to string."""
        if self.is_rational():
            return str(self.value)

        return format_series(self.series(4))

    def __repr__(self) -> str:
        """Get the representation."""
        return f"HenselElement({self.kind!r}, {self!s})"


HenselElement.__module__ = "effalg"


def helem_eq(x: HenselElement, y: HenselElement) -> bool:
    """Decide equality in the henselization.

    A nonzero root of ``c_0 + c_1 Z + ...`` with ``c_0 != 0`` has valuation
    at most ``v(c_0) - min(v(c_i))``, so the series of ``x - y`` decides
    once it vanishes up to that exponent.

    :param x: an element
    :param y: an element over the same ``K(t)``
    :return: whether ``x = y``
    """
    if x is y:
        return True

    if x.is_rational() and y.is_rational():
        return x.value == y.value

    # a simple residue root lifts uniquely
    if (x.kind == y.kind == "lift" and x.poly == y.poly
            and x.root == y.root):
        return True

    a, b = x.series(4), y.series(4)
    end: int = min(a.precision, b.precision)
    if any(a[e] != b[e] for e in range(min(a.start, b.start), end)):
        return False

    if x.is_rational() or y.is_rational():
        if y.is_rational():
            x, y = y, x

        if y.annihilator()(x.value):
            return False

    difference: HenselElement = x - y
    h: Poly = difference.annihilator()
    if h[0]:
        return False

    reduced: Poly = _strip_zero_root(h)
    if reduced.degree <= 0:
        return True

    bound: float = v_t(reduced[0]) - min(
        v_t(coef) for coef in reduced.coeffs[1:] if coef
    )
    top: int = max(int(bound), 0)
    series: Series = difference.series(top + 1)
    return all(not series[e] for e in range(series.start, top + 1))


_LIFTS_PER_STAGE: int = 4


@lru_cache(maxsize=None)
def _code_tuples(weight: int) -> tuple[tuple[int, ...], ...]:
    # codes with sum(code + 1) == weight, the last one nonzero
    if not weight:
        return ((),)

    result: list[tuple[int, ...]] = []
    for code in range(weight):
        for rest in _code_tuples(weight - code - 1):
            if rest or code:
                result.append((code, *rest))

    return tuple(result)


def _coefficient_choices(index: int,
                         weight: int) -> tuple[tuple[int, ...], ...]:
    choices: tuple[tuple[int, ...], ...] = _code_tuples(weight)
    if index == 0:
        return tuple(codes for codes in choices if codes and not codes[0])

    if index == 1:
        return tuple(codes for codes in choices if codes and codes[0])

    return choices


def _distribute(index: int, slots: int, weight: int,
                ) -> Iterator[_Candidate]:
    if index == slots:
        if not weight:
            yield ()

        return

    for part in range(weight + 1):
        for codes in _coefficient_choices(index, part):
            for rest in _distribute(index + 1, slots, weight - part):
                yield codes, *rest


def lift_candidates(weight: int) -> list[_Candidate]:
    """Get the polynomials lifted by a henselization at a weight.

    A candidate lists the coefficients ``c_0, ..., c_(n-1)`` of the monic
    ``Y^n + c_(n-1) Y^(n-1) + ... + c_0`` with ``n >= 2``, each coefficient
    as the codes of its coefficients in ``t``, constant term first and
    without trailing zeros. ``c_0`` vanishes at ``t = 0`` and ``c_1``
    doesn't, so ``0`` is a simple residue root. The weight is ``n`` plus
    ``code + 1`` for every code.

    :param weight: the weight
    :return: the candidates of that weight, by degree

    Example:
        >>> from effalg import lift_candidates
        >>> lift_candidates(7)
        [((0, 1), (1,))]

    """
    candidates: list[_Candidate] = []
    for degree in range(2, weight + 1):
        candidates.extend(_distribute(0, degree, weight - degree))

    return candidates


def _all_candidates() -> Iterator[tuple[int, _Candidate]]:
    for weight in count(1):
        for candidate in lift_candidates(weight):
            yield weight, candidate


class HenselField(ClosureStream):
    """The henselization of ``F(t)`` at ``t = 0``, with universe omega.

    ``0``, ``1`` and ``t`` are seeded at stage ``0`` and the element with
    code ``c`` of ``F`` at stage ``c``. From stage ``s`` on, the
    :func:`lift_candidates` of weight at most ``s`` are lifted at the
    residue root ``0``, a few per stage, in order of weight. Every finite
    extension inside the henselization is generated by such a lift divided
    by a polynomial in ``t`` and shifted by a residue.

    :param base: an exact algebraic field diagram
    """

    def __init__(self, base: AlgebraicFieldDiagram) -> None:
        """Create a new henselization."""
        if not isinstance(base, AlgebraicFieldDiagram):
            msg: str = "The henselization needs an exact algebraic base field"
            raise TypeError(msg)

        super().__init__(f"{base.name}(t)^h")
        self.base: AlgebraicFieldDiagram = base
        self.residue_field: CycloField = base.field
        self.ring: RatFuncField = RatFuncField(base.field, "t")
        self._next_base: int = 0
        self._candidates: Iterator[tuple[int, _Candidate]] = (
            _all_candidates()
        )
        self._upcoming: tuple[int, _Candidate] | None = None
        self._deferred: list[_Candidate] = []
        self.lifted: list[Poly] = []

    def _grow(self, stage: int) -> None:
        self.base.advance(stage)
        field: CycloField = self.base.field
        if field == self.residue_field:
            return

        old: CycloField = self.residue_field
        ring: RatFuncField = RatFuncField(field, "t")
        logger.debug("%s: residue field %r at stage %d", self.name, field,
                     stage)

        def embed(element: Any) -> Any:
            return old.embed(element, field)

        self.elements = [e.map(embed, ring) for e in self.elements]
        self._waiting_seeds = [
            e.map(embed, ring) for e in self._waiting_seeds
        ]
        self.residue_field, self.ring = field, ring

    def candidate_poly(self, candidate: _Candidate) -> Poly:
        """Get the polynomial of a lift candidate over the current ring."""
        constants: list[Any] = self.base.elements
        coeffs: list[RatFunc] = [
            self.ring(Poly(
                [constants[code] for code in codes], self.residue_field,
            ))
            for codes in candidate
        ]
        return Poly([*coeffs, self.ring.one], self.ring)

    def _next_candidate(self, stage: int) -> _Candidate | None:
        if self._upcoming is None:
            self._upcoming = next(self._candidates)

        weight, candidate = self._upcoming
        if weight > stage:
            return None

        self._upcoming = None
        return candidate

    def _lifts(self, stage: int) -> Iterable[HenselElement]:
        size: int = len(self.base.elements)
        retry: list[_Candidate] = self._deferred
        self._deferred = []
        for _ in range(_LIFTS_PER_STAGE):
            if retry:
                candidate: _Candidate | None = retry.pop(0)
            elif (candidate := self._next_candidate(stage)) is None:
                break

            if any(code >= size for codes in candidate for code in codes):
                self._deferred.append(candidate)
                continue

            poly: Poly = self.candidate_poly(candidate)
            logger.debug("%s: lifting %s at stage %d", self.name,
                         poly.format("Y"), stage)
            self.lifted.append(poly)
            yield HenselElement.lift(poly, self.residue_field.zero)

        self._deferred.extend(retry)

    def _seeds(self, stage: int) -> Iterable[Any]:
        if not stage:
            yield HenselElement.rational(self.ring.zero)
            yield HenselElement.rational(self.ring.one)
            yield HenselElement.rational(self.ring.gen)

        while self._next_base <= min(stage, len(self.base.elements) - 1):
            yield HenselElement.rational(
                self.ring(self.base.elements[self._next_base]),
            )
            self._next_base += 1

        yield from self._lifts(stage)

    def _equal(self, stage: int, a: Any, b: Any) -> bool | None:
        return helem_eq(a, b)

    def _operate(self, stage: int, sym: str, a: Any, b: Any) -> Any:
        if sym == "+":
            return a + b

        if sym == "-":
            return a - b

        return a * b

    def _inverse(self, stage: int, a: Any) -> Any | None:
        if a.is_rational() and not a.value:
            return None

        return a.inverse()

    def residue(self, code: int, stage: int | None = None) -> Any | None:
        """Get the residue of an element, ``None`` for a pole."""
        return residue(self.element(code, stage))

    def valuation(self, code: int, stage: int | None = None) -> float:
        """Get the valuation of an element."""
        return self.element(code, stage).valuation()


HenselField.__module__ = "effalg"


def henselize(base: AlgebraicFieldDiagram) -> HenselField:
    """Embed ``F`` into a field of transcendence degree one more.

    The output is the henselization of ``F(t)`` at ``t = 0``; its residue
    field is ``F`` and its value group the integers.

    :param base: an exact algebraic field diagram
    :raises TypeError: for other field diagrams
    :return: the henselization
    """
    return HenselField(base)


def residue(element: HenselElement) -> Any | None:
    """Get the constant term of an integral element, ``None`` for a pole."""
    if element.valuation() < 0:
        return None

    return element.series(1)[0]


class _Unknown(LookupError):
    pass


def hensel_morphism(source: HenselField,
                    base_map: Callable[[int, int], int | None],
                    target: HenselField) -> FieldMorphism:
    """Extend a map of the base fields with ``t -> t``.

    Lifted roots go to the lifts of the image polynomials at the image
    residue roots.

    :param source: the domain
    :param base_map: the base map on codes, ``None`` if not yet known
    :param target: the codomain
    :raises MorphismViolationError: when an image residue root isn't simple
    :return: the map on codes
    """
    def image(code: int, stage: int) -> int | None:
        target.advance(stage)
        value: HenselElement = source.element(code, stage)

        def function(coef: Any) -> Any:
            base_code: int | None = source.base.code_of(coef)
            if base_code is None:
                raise _Unknown

            if (mapped := base_map(base_code, stage)) is None:
                raise _Unknown

            return target.residue_field(target.base.element(mapped))

        try:
            mapped_value: HenselElement = value.map(function, target.ring)
        except _Unknown:
            return None
        except NoSimpleRootError as exc:
            msg: str = "The base map doesn't preserve simple roots"
            raise MorphismViolationError(msg, value) from exc

        return target.code_of(mapped_value)

    return FieldMorphism(source, target, image, "hensel(f)")
