# Copyright (C) 2024 Nice Zombies
"""Fields of characteristic zero and finite transcendence degree."""
from __future__ import annotations

__all__: list[str] = [
    "AlgebraicFieldDiagram",
    "ClosureStream",
    "Coded",
    "FieldMorphism",
    "MorphismViolationError",
    "NestingViolationError",
    "RadicalFieldDiagram",
    "RootSetApproximation",
    "TranscendentalDiagram",
    "cyclotomic_field",
    "evaluate",
    "example_field",
    "inf_reduction",
    "integer_constant",
    "integer_polynomial",
    "integer_polynomials",
    "odd_primes_product",
    "pi2_reduction",
    "poly_index",
    "pure_transcendental",
    "radical_field",
    "root_set_operator",
    "transcendental_morphism",
]

import logging
from abc import abstractmethod
from functools import lru_cache, partial
from itertools import product
from math import gcd, prod
from typing import TYPE_CHECKING, Any, NamedTuple

from sympy import isprime

from effalg._diagrams import EmittedStream, _row
from effalg._exact import (
    QQ, CycloElement, CycloField, Poly, RatFunc, RatFuncField,
    UnsupportedConductorError, cyclo_inverse,
)
from effalg._tfab import nth_prime
from effalg.signatures import FIELD

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence

    from effalg._diagrams import DiagramStream
    from effalg._oracles import Detector, Enumeration

logger: logging.Logger = logging.getLogger(__name__)


class Pending(LookupError):
    """A value that depends on facts not committed yet."""


class _Deferred(NamedTuple):
    """A generator that can only be built once enough facts are committed."""

    build: Callable[[], Any]


class NestingViolationError(ValueError):
    """A detector that fired before the detector it's nested in.

    :param index: the detector that fired too early
    :param stage: the stage
    """

    def __init__(self, index: int, stage: int) -> None:
        """Create a new nesting violation error."""
        super().__init__(
            f"Detector {index} fired at stage {stage} before detector "
            f"{index - 1}",
        )
        self.index: int = index
        self.stage: int = stage


class MorphismViolationError(ValueError):
    """A map that doesn't preserve a committed fact.

    :param msg: an error message
    :param fact: the violated fact
    """

    def __init__(self, msg: str, fact: object) -> None:
        """Create a new morphism violation error."""
        super().__init__(f"{msg}: {fact!r}")
        self.msg: str = msg
        self.fact: object = fact


NestingViolationError.__module__ = "effalg"
MorphismViolationError.__module__ = "effalg"


class ClosureStream(EmittedStream):
    """A field diagram emitted by closing generators under the operations.

    Row ``r`` commits the ``+``, ``-`` and ``*`` facts for the code pairs
    whose largest member is ``r`` and places the inverse of element ``r``.
    Results get the code of an equal element, or the next free code.
    Anything that can't be decided yet is retried at later stages.
    """

    def __init__(self, name: str = "F") -> None:
        """Create a new closure stream."""
        super().__init__(FIELD)
        self.name: str = name
        self.elements: list[Any] = []
        self._pending: list[tuple[str, tuple[int, ...]]] = []
        self._waiting_seeds: list[Any] = []
        self._next_row: int = 0
        self._constants: bool = False

    def __repr__(self) -> str:
        """Get the representation."""
        return f"{type(self).__name__}({self.name!r})"

    @abstractmethod
    def _seeds(self, stage: int) -> Iterable[Any]:
        """Get the generators first seen at a stage, zero and one first."""

    @abstractmethod
    def _operate(self, stage: int, sym: str, a: Any, b: Any) -> Any:
        """Compute a binary operation, raising Pending if unknown."""

    @abstractmethod
    def _inverse(self, stage: int, a: Any) -> Any | None:
        """Invert, ``None`` for zero, raising Pending if unknown."""

    def _equal(self, stage: int, a: Any, b: Any) -> bool | None:
        """Decide equality, ``None`` if unknown."""
        return bool(a == b)

    def _grow(self, stage: int) -> None:
        """Prepare the representation for a stage."""

    def _find(self, stage: int, value: Any) -> int | None:
        """Get the code of an equal element, ``None`` if there is none."""
        unsure: bool = False
        for code, element in enumerate(self.elements):
            verdict: bool | None = self._equal(stage, value, element)
            if verdict:
                return code

            if verdict is None:
                unsure = True

        if unsure:
            raise Pending

        return None

    def _admit(self, value: Any) -> int:
        code: int = len(self.elements)
        self.elements.append(value)
        logger.debug("%s: new element %d = %s", self.name, code, value)
        return code

    def _place(self, stage: int, value: Any) -> int:
        if (code := self._find(stage, value)) is None:
            code = self._admit(value)

        return code

    def _fact(self, stage: int, sym: str, args: tuple[int, ...]) -> None:
        try:
            if sym == "/":
                inverse: Any | None = self._inverse(
                    stage, self.elements[args[0]],
                )
                if inverse is not None:
                    self._place(stage, inverse)

                return

            a, b = (self.elements[arg] for arg in args)
            res: int = self._place(stage, self._operate(stage, sym, a, b))
        except Pending:
            self._pending.append((sym, args))
            return

        self._commit(sym, args, res)

    def _step(self, stage: int) -> None:
        self._grow(stage)
        seeds: list[Any] = [*self._waiting_seeds, *self._seeds(stage)]
        self._waiting_seeds = []
        for value in seeds:
            try:
                if isinstance(value, _Deferred):
                    value = value.build()

                self._place(stage, value)
            except Pending:
                self._waiting_seeds.append(value)

        if not self._constants and len(self.elements) >= 2:
            self._commit("0", (), 0)
            self._commit("1", (), 1)
            self._constants = True

        pending: list[tuple[str, tuple[int, ...]]] = self._pending
        self._pending = []
        for sym, args in pending:
            self._fact(stage, sym, args)

        if self._next_row <= stage and self._next_row < len(self.elements):
            row: int = self._next_row
            self._next_row += 1
            for args in _row(2, row):
                for sym in ("+", "-", "*"):
                    self._fact(stage, sym, args)

            self._fact(stage, "/", (row,))

    def element(self, code: int, stage: int | None = None) -> Any:
        """Get the element with a code."""
        if stage is not None:
            self.advance(stage)

        return self.elements[code]

    def code_of(self, value: Any, stage: int | None = None) -> int | None:
        """Get the code of an element, ``None`` if it has none yet."""
        if stage is not None:
            self.advance(stage)

        try:
            return self._find(max(self._stage, 0), value)
        except Pending:
            return None


ClosureStream.__module__ = "effalg"


class _ExactClosure(ClosureStream):
    def __init__(self, name: str) -> None:
        super().__init__(name)
        self._codes: dict[Any, int] = {}

    def _find(self, stage: int, value: Any) -> int | None:
        return self._codes.get(value)

    def _admit(self, value: Any) -> int:
        code: int = super()._admit(value)
        self._codes[value] = code
        return code

    def _reindex(self, elements: list[Any]) -> None:
        self.elements = elements
        self._codes = {value: code for code, value in enumerate(elements)}

    def _operate(self, stage: int, sym: str, a: Any, b: Any) -> Any:
        if sym == "+":
            return a + b

        if sym == "-":
            return a - b

        return a * b


@lru_cache(maxsize=None)
def odd_primes_product(count: int) -> int:
    """Get the product of the first ``count`` odd primes."""
    return prod(nth_prime(i) for i in range(1, count + 1))


class AlgebraicFieldDiagram(_ExactClosure):
    """A cyclotomic field whose conductor grows with the stage.

    Elements keep their codes when the conductor grows: they're re-embedded
    along the canonical embedding.

    :param conductor: the conductor at each stage, dividing later ones
    :param name: a name for reports
    """

    def __init__(self, conductor: Callable[[int], int], name: str = "F",
                 ) -> None:
        """Create a new algebraic field diagram."""
        super().__init__(name)
        self.conductor: Callable[[int], int] = conductor
        self.field: CycloField = CycloField(1)
        self._history: list[int] = []
        self._fresh: list[CycloElement] = []

    def _grow(self, stage: int) -> None:
        conductor: int = self.conductor(stage)
        self._history.append(conductor)
        if conductor == self.field.conductor:
            return

        if conductor % self.field.conductor:
            msg: str = (
                f"Conductor {conductor} at stage {stage} isn't a multiple of "
                f"{self.field.conductor}"
            )
            raise ValueError(msg)

        field: CycloField = CycloField(conductor)
        logger.debug("%s: conductor %d at stage %d", self.name, conductor,
                     stage)
        self._reindex([self.field.embed(e, field) for e in self.elements])
        self.field = field
        self._fresh.append(field.gen)

    def _seeds(self, stage: int) -> Iterable[Any]:
        if not stage:
            yield self.field.zero
            yield self.field.one

        yield from self._fresh
        self._fresh = []

    def _inverse(self, stage: int, a: Any) -> Any | None:
        return cyclo_inverse(a) if a else None

    def conductor_at(self, stage: int) -> int:
        """Get the conductor used at a stage."""
        self.advance(stage)
        return self._history[stage]

    def code_of(self, value: Any, stage: int | None = None) -> int | None:
        """Get the code of an element of a subfield, if it has one yet."""
        if stage is not None:
            self.advance(stage)

        if isinstance(value, CycloElement):
            if self.field.conductor % value.field.conductor:
                return None

            value = value.field.embed(value, self.field)
        else:
            value = self.field(value)

        return self._codes.get(value)


def cyclotomic_field(conductor: int) -> AlgebraicFieldDiagram:
    """Get a fixed cyclotomic field, conductor ``1`` for the rationals."""
    CycloField(conductor)
    return AlgebraicFieldDiagram(
        lambda _: conductor, "Q" if conductor == 1 else f"Q(zeta{conductor})",
    )


def example_field() -> AlgebraicFieldDiagram:
    """Get the field with a primitive ``q``-th root of unity for odd primes.

    At stage ``s`` the conductor is the product of the first ``s`` odd
    primes.
    """
    return AlgebraicFieldDiagram(odd_primes_product, "example")


def inf_reduction(enumeration: Enumeration) -> AlgebraicFieldDiagram:
    """Reduce an enumeration to a field, adjoining a root per element.

    The output is isomorphic to :func:`example_field` iff the enumerated set
    is infinite.
    """
    return AlgebraicFieldDiagram(
        lambda stage: odd_primes_product(len(enumeration.enumerated(stage))),
        f"inf[{enumeration.name}]",
    )


def pi2_reduction(stream: Callable[[int], int],
                  detectors: Callable[[int], Detector],
                  ) -> AlgebraicFieldDiagram:
    """Reduce a stream to a field, adjoining a root per fired detector.

    Detector ``n`` adjoins a primitive root of unity of order the ``n``-th
    odd prime, counting from ``3``.

    :param stream: the bit stream
    :param detectors: nested detectors, detector ``0`` firing at once
    :raises NestingViolationError: when a detector fires before its
                                   predecessor
    :return: a field isomorphic to :func:`example_field` iff every detector
             fires
    """
    def conductor(stage: int) -> int:
        fired: int = 0
        for index in range(stage + 1):
            if detectors(index).fires(stream, stage):
                if fired < index:
                    raise NestingViolationError(index, stage)

                fired += 1

        return odd_primes_product(fired)

    return AlgebraicFieldDiagram(conductor, "pi2")


class _CodedField:
    """The field of a diagram, computing with codes through its facts."""

    def __init__(self, stream: DiagramStream) -> None:
        self.stream: DiagramStream = stream
        self.stage: int = 0

    def __repr__(self) -> str:
        return f"coded({self.stream!r})"

    def _constant(self, sym: str) -> Coded:
        if (code := self.stream.lookup(self.stage, sym, ())) is None:
            raise Pending

        return Coded(self, code)

    @property
    def zero(self) -> Coded:
        return self._constant("0")

    @property
    def one(self) -> Coded:
        return self._constant("1")

    def __call__(self, value: Any) -> Coded:
        if isinstance(value, Coded):
            return value

        if isinstance(value, int):
            code: int | None = integer_constant(self.stream, self.stage, value)
            if code is None:
                raise Pending

            return Coded(self, code)

        msg: str = f"Can't convert {value!r} to a coded element"
        raise TypeError(msg)


class Coded:
    """An element of a field diagram, named by its code."""

    __slots__: tuple[str, ...] = ("code", "field")

    def __init__(self, field: _CodedField, code: int) -> None:
        """Create a new coded element."""
        self.field: _CodedField = field
        self.code: int = code

    def _apply(self, sym: str, other: Any) -> Coded:
        other = self.field(other)
        res: int | None = self.field.stream.lookup(
            self.field.stage, sym, (self.code, other.code),
        )
        if res is None:
            raise Pending

        return Coded(self.field, res)

    def __add__(self, other: Any) -> Coded:
        """Add."""
        return self._apply("+", other)

    __radd__ = __add__

    def __sub__(self, other: Any) -> Coded:
        """Subtract."""
        return self._apply("-", other)

    def __rsub__(self, other: Any) -> Coded:
        """Subtract from an integer."""
        return self.field(other)._apply("-", self)

    def __mul__(self, other: Any) -> Coded:
        """Multiply."""
        return self._apply("*", other)

    __rmul__ = __mul__

    def __neg__(self) -> Coded:
        """Negate."""
        return self.field.zero - self

    def inverse(self) -> Coded:
        """Invert by searching the committed products."""
        if not self:
            msg: str = "inverse of zero in a field diagram"
            raise ZeroDivisionError(msg)

        one: int = self.field.one.code
        for code in range(self.field.stage + 1):
            if self.field.stream.lookup(
                self.field.stage, "*", (self.code, code),
            ) == one:
                return Coded(self.field, code)

        raise Pending

    def __truediv__(self, other: Any) -> Coded:
        """Divide."""
        return self * self.field(other).inverse()

    def __rtruediv__(self, other: Any) -> Coded:
        """Divide an integer."""
        return self.field(other) * self.inverse()

    def __bool__(self) -> bool:
        """Check if nonzero."""
        return self.code != self.field.zero.code

    def __eq__(self, other: object) -> bool:
        """Check equality."""
        if isinstance(other, Coded):
            return self.code == other.code

        if isinstance(other, int):
            return self.code == self.field(other).code

        return NotImplemented

    def __hash__(self) -> int:
        """Get the hash."""
        return hash(self.code)

    def __str__(self) -> str:
        """Convert to string."""
        return f"a{self.code}"

    __repr__ = __str__


Coded.__module__ = "effalg"


class TranscendentalDiagram(_ExactClosure):
    """The purely transcendental extension ``A(t)`` of a field diagram.

    Elements are rational functions whose coefficients are codes of ``A``,
    in lowest terms with a monic denominator, so equality is decided
    coefficientwise.

    :param base: the field diagram ``A``
    """

    def __init__(self, base: DiagramStream) -> None:
        """Create a new transcendental diagram."""
        super().__init__(f"{getattr(base, 'name', 'A')}(t)")
        self.base: DiagramStream = base
        self.coded: _CodedField = _CodedField(base)
        self.field: RatFuncField = RatFuncField(self.coded, "t")

    def _grow(self, stage: int) -> None:
        self.coded.stage = stage

    def _seeds(self, stage: int) -> Iterable[Any]:
        if not stage:
            yield _Deferred(lambda: self.field.zero)
            yield _Deferred(lambda: self.field.one)
            yield _Deferred(lambda: self.field.gen)

        yield _Deferred(partial(self.constant, stage))

    def _inverse(self, stage: int, a: Any) -> Any | None:
        return a.inverse() if a else None

    def constant(self, code: int) -> RatFunc:
        """Get the constant function of an element of the base."""
        return self.field(Coded(self.coded, code))

    def element_from(self, num: Sequence[int], den: Sequence[int] = (1,),
                     stage: int = 0) -> RatFunc:
        """Build ``num / den`` from coefficient codes, constant term first."""
        self.advance(stage)
        self.coded.stage = max(self.coded.stage, stage)
        one: Coded = self.coded.one
        return self.field.quotient(
            Poly([Coded(self.coded, code) for code in num], self.coded),
            Poly([Coded(self.coded, code) for code in den], self.coded)
            if tuple(den) != (1,) else Poly([one], self.coded),
        )


def pure_transcendental(base: DiagramStream) -> TranscendentalDiagram:
    """Adjoin a transcendental ``t`` to a field diagram.

    Isomorphic inputs give isomorphic outputs, through the isomorphism of
    the coefficients extended by ``t -> t``.
    """
    return TranscendentalDiagram(base)


def transcendental_morphism(source: TranscendentalDiagram,
                            base_map: Callable[[int], int | None],
                            target: TranscendentalDiagram) -> FieldMorphism:
    """Extend an isomorphism of the bases coefficientwise, with ``t -> t``."""
    def function(code: int, stage: int) -> int | None:
        target.advance(stage)
        target.coded.stage = max(target.coded.stage, stage)
        value: RatFunc = source.element(code, stage)
        try:
            num: list[Coded] = []
            den: list[Coded] = []
            for coeffs, out in ((value.num.coeffs, num),
                                (value.den.coeffs, den)):
                for coeff in coeffs:
                    if (image := base_map(coeff.code)) is None:
                        return None

                    out.append(Coded(target.coded, image))

            image_value: RatFunc = target.field.quotient(
                Poly(num, target.coded), Poly(den, target.coded),
            )
        except Pending:
            return None

        return target.code_of(image_value)

    return FieldMorphism(source, target, function, "t -> t")


class RadicalFieldDiagram(_ExactClosure):
    """The field generated over ``Q`` by roots of ``t``.

    At level ``n`` the field is ``Q(u)`` with ``u^n = t``; raising the level
    to ``m`` re-embeds every element along ``u -> u^(m/n)``.

    :param primes: odd primes, prime ``i`` committed at stage ``i``, or a
                   function from stages to the primes committed so far
    """

    def __init__(self, primes: Sequence[int] | Callable[[int], Sequence[int]],
                 ) -> None:
        """Create a new radical field diagram."""
        if callable(primes):
            self.primes: Callable[[int], Sequence[int]] = primes
            name: str = "radical"
        else:
            fixed: tuple[int, ...] = tuple(primes)
            for p in fixed:
                _check_radical_prime(p)

            self.primes = lambda stage: fixed[:stage + 1]
            name = f"radical{list(fixed)}"

        super().__init__(name)
        self.field: RatFuncField = RatFuncField(QQ, "u")
        self.level: int = 1
        self._history: list[int] = []
        self._fresh: list[RatFunc] = []

    def _grow(self, stage: int) -> None:
        primes: set[int] = set(self.primes(stage))
        for p in primes:
            _check_radical_prime(p)

        level: int = prod(primes)
        self._history.append(level)
        if level == self.level:
            return

        if level % self.level:
            msg: str = f"Level {level} isn't a multiple of {self.level}"
            raise ValueError(msg)

        power: Poly = Poly.monomial(level // self.level)
        logger.debug("%s: level %d at stage %d", self.name, level, stage)
        self._reindex([
            self.field.quotient(e.num.compose(power), e.den.compose(power))
            for e in self.elements
        ])
        self.level = level
        self._fresh.append(self.field.gen)

    def _seeds(self, stage: int) -> Iterable[Any]:
        if not stage:
            yield self.field.zero
            yield self.field.one
            yield self.t

        yield from self._fresh
        self._fresh = []

    def _inverse(self, stage: int, a: Any) -> Any | None:
        return a.inverse() if a else None

    @property
    def t(self) -> RatFunc:
        """The element ``t = u^n`` at the current level."""
        return self.field(Poly.monomial(self.level))

    def level_at(self, stage: int) -> int:
        """Get the level used at a stage."""
        self.advance(stage)
        return self._history[stage]

    def root_of_t(self, q: int, stage: int) -> int | None:
        """Get the code of ``t^(1/q)``, ``None`` if the level lacks it."""
        self.advance(stage)
        if self.level % q:
            return None

        return self.code_of(self.field(Poly.monomial(self.level // q)))

    def format_element(self, code: int) -> str:
        """Format an element in ``u``, e.g. ``"u^8"``."""
        return str(self.elements[code])

    def header(self) -> str:
        """Describe the current level."""
        return f"level {self.level}: t = u^{self.level}"


def _check_radical_prime(p: int) -> None:
    if p == 2 or not isprime(p):
        raise UnsupportedConductorError(p)


def radical_field(primes: Sequence[int] | Callable[[int], Sequence[int]],
                  ) -> RadicalFieldDiagram:
    """Get the field generated by the ``p``-th roots of ``t``.

    :param primes: odd primes
    :raises UnsupportedConductorError: for ``2`` or a composite
    :return: the field diagram
    """
    return RadicalFieldDiagram(primes)


def integer_constant(stream: DiagramStream, stage: int, n: int) -> int | None:
    """Get the code of an integer through committed facts."""
    if n in {0, 1}:
        return stream.lookup(stage, str(n), ())

    if n < 0:
        zero: int | None = stream.lookup(stage, "0", ())
        positive: int | None = integer_constant(stream, stage, -n)
        if zero is None or positive is None:
            return None

        return stream.lookup(stage, "-", (zero, positive))

    result: int | None = stream.lookup(stage, "0", ())
    base: int | None = stream.lookup(stage, "1", ())
    while n and result is not None and base is not None:
        if n & 1:
            result = stream.lookup(stage, "+", (result, base))

        n >>= 1
        if n:
            base = stream.lookup(stage, "+", (base, base))

    return None if n and base is None else result


def evaluate(stream: DiagramStream, coeffs: Sequence[int], code: int,
             stage: int) -> int | None:
    """Evaluate an integer polynomial at an element through committed facts.

    :param stream: a field diagram
    :param coeffs: the coefficients, constant term first
    :param code: the element
    :param stage: the stage to read facts at
    :return: the code of the value, ``None`` if unknown
    """
    if not coeffs:
        return stream.lookup(stage, "0", ())

    result: int | None = integer_constant(stream, stage, coeffs[-1])
    for coeff in reversed(coeffs[:-1]):
        constant: int | None = integer_constant(stream, stage, coeff)
        if result is None or constant is None:
            return None

        product_code: int | None = stream.lookup(stage, "*", (result, code))
        if product_code is None:
            return None

        result = stream.lookup(stage, "+", (product_code, constant))

    return result


def _zigzag_range(h: int) -> list[int]:
    values: list[int] = [0]
    for i in range(1, h + 1):
        values += [i, -i]

    return values


@lru_cache(maxsize=None)
def _polynomials_of_level(h: int) -> tuple[tuple[int, ...], ...]:
    level: list[tuple[int, ...]] = []
    for degree in range(1, h + 1):
        for lead in range(1, h + 1):
            for lower in product(_zigzag_range(h), repeat=degree):
                coeffs: tuple[int, ...] = (*reversed(lower), lead)
                if max(max(map(abs, coeffs)), degree) != h:
                    continue

                if gcd(*coeffs) == 1:
                    level.append(coeffs)

    return tuple(level)


def integer_polynomial(n: int) -> tuple[int, ...]:
    """Get the ``n``-th integer polynomial, constant term first.

    Polynomials of positive degree with positive leading coefficient and
    content one are ordered by ``max(height, degree)``, then degree, leading
    coefficient and the lower coefficients in the order ``0, 1, -1, ...``
    from the top down.

    Example:
        >>> from effalg import integer_polynomial
        >>> [integer_polynomial(n) for n in range(3)]
        [(0, 1), (1, 1), (-1, 1)]

    """
    h: int = 1
    while n >= len(level := _polynomials_of_level(h)):
        n -= len(level)
        h += 1

    return level[n]


def integer_polynomials(count: int) -> list[tuple[int, ...]]:
    """Get the first ``count`` integer polynomials."""
    return [integer_polynomial(n) for n in range(count)]


def poly_index(coeffs: Sequence[int]) -> int:
    """Invert :func:`integer_polynomial`."""
    coeffs = tuple(coeffs)
    if len(coeffs) < 2 or coeffs[-1] <= 0 or gcd(*coeffs) != 1:
        msg: str = f"{coeffs} is not in the enumeration"
        raise ValueError(msg)

    h: int = max(max(map(abs, coeffs)), len(coeffs) - 1)
    offset: int = sum(len(_polynomials_of_level(i)) for i in range(1, h))
    return offset + _polynomials_of_level(h).index(coeffs)


class RootSetApproximation:
    """The indices of the integer polynomials with a root in a field.

    :param stream: a field diagram
    :param search: the number of codes to try as roots, by default the
                   stage plus one
    """

    def __init__(self, stream: DiagramStream, search: int | None = None,
                 ) -> None:
        """Create a new root set approximation."""
        self.stream: DiagramStream = stream
        self.search: int | None = search

    def witness(self, n: int, stage: int) -> int | None:
        """Get a root of polynomial ``n`` committed by a stage."""
        zero: int | None = self.stream.lookup(stage, "0", ())
        if zero is None:
            return None

        coeffs: tuple[int, ...] = integer_polynomial(n)
        bound: int = stage + 1 if self.search is None else self.search
        for code in range(bound):
            if evaluate(self.stream, coeffs, code, stage) == zero:
                return code

        return None

    def confirmed(self, stage: int, limit: int | None = None,
                  ) -> frozenset[int]:
        """Get the polynomial indices below a limit with a committed root."""
        count: int = stage + 1 if limit is None else limit
        return frozenset(
            n for n in range(count) if self.witness(n, stage) is not None
        )


RootSetApproximation.__module__ = "effalg"


def root_set_operator(stream: DiagramStream, search: int | None = None,
                      ) -> RootSetApproximation:
    """Map a field to the set of integer polynomials with a root in it.

    For algebraic fields the limit sets are equal iff the fields are
    isomorphic.
    """
    return RootSetApproximation(stream, search)


class FieldMorphism:
    """A stagewise map between field diagrams.

    :param source: the domain
    :param target: the codomain
    :param function: maps a code at a stage, ``None`` if not yet known
    :param name: a name for reports
    """

    def __init__(self, source: DiagramStream, target: DiagramStream,
                 function: Callable[[int, int], int | None],
                 name: str = "morphism") -> None:
        """Create a new field morphism."""
        self.source: DiagramStream = source
        self.target: DiagramStream = target
        self.function: Callable[[int, int], int | None] = function
        self.name: str = name

    def __repr__(self) -> str:
        """Get the representation."""
        return f"FieldMorphism({self.name!r})"

    def __call__(self, code: int, stage: int) -> int | None:
        """Map a code at a stage."""
        return self.function(code, stage)

    def then(self, other: FieldMorphism) -> FieldMorphism:
        """Compose: first apply ``self``, then ``other``."""
        def function(code: int, stage: int) -> int | None:
            if (image := self(code, stage)) is None:
                return None

            return other(image, stage)

        return FieldMorphism(
            self.source, other.target, function, f"{other.name}.{self.name}",
        )

    def check(self, stage: int, limit: int) -> int:
        """Check that committed facts among small codes are preserved.

        :param stage: the stage to read facts at
        :param limit: only facts whose codes are all below this are checked
        :raises MorphismViolationError: when a fact isn't preserved
        :return: the number of facts checked
        """
        checked: int = 0
        for fact, _ in self.source.facts(stage):
            if max((*fact.args, fact.res)) >= limit:
                continue

            images: list[int | None] = [
                self(code, stage) for code in (*fact.args, fact.res)
            ]
            if None in images:
                continue

            *args, res = images
            image: int | None = self.target.lookup(
                stage, fact.sym, tuple(args),  # type: ignore
            )
            if image is None:
                continue

            if image != res:
                msg: str = f"{self.name} doesn't preserve a fact"
                raise MorphismViolationError(msg, fact)

            checked += 1

        return checked


FieldMorphism.__module__ = "effalg"
for _cls in (AlgebraicFieldDiagram, RadicalFieldDiagram,
             TranscendentalDiagram):
    _cls.__module__ = "effalg"
