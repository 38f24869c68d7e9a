# Copyright (C) 2024 Nice Zombies
"""The field of fractions of the group ring of a torsion-free group."""
from __future__ import annotations

__all__: list[str] = [
    "FieldQuotient",
    "MonomialCombination",
    "PhiField",
    "ProbeReport",
    "check_homomorphism",
    "monomial_map",
    "phi_morphism",
    "phi_object",
    "quotient_eq",
    "ring_mul",
    "root_evidence",
    "zero_divisor_probe",
]

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import TYPE_CHECKING, Any

from effalg._fields import (
    ClosureStream, FieldMorphism, MorphismViolationError, Pending,
)

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator, Mapping

    from effalg._diagrams import DiagramStream

logger: logging.Logger = logging.getLogger(__name__)


class MonomialCombination:
    """A finite rational combination of monomials ``Y[g]``.

    Monomials are named by group codes; zero coefficients are dropped.

    :param terms: the coefficients by code
    """

    __slots__: tuple[str, ...] = ("_terms",)

    def __init__(self, terms: Mapping[int, Any] | Iterable[tuple[int, Any]]
                 = ()) -> None:
        """Create a new monomial combination."""
        items: Iterable[tuple[int, Any]] = (
            terms.items() if hasattr(terms, "items") else terms  # type: ignore
        )
        collected: dict[int, Fraction] = {}
        for code, coef in items:
            collected[code] = collected.get(code, Fraction(0)) + Fraction(coef)

        self._terms: dict[int, Fraction] = {
            code: coef for code, coef in collected.items() if coef
        }

    @classmethod
    def monomial(cls, code: int, coef: Any = 1) -> MonomialCombination:
        """Get ``coef * Y[code]``."""
        return cls({code: coef})

    @property
    def support(self) -> frozenset[int]:
        """The codes with a nonzero coefficient."""
        return frozenset(self._terms)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Iterate over the terms by code."""
        return iter(sorted(self._terms.items()))

    def __getitem__(self, code: int) -> Fraction:
        """Get a coefficient."""
        return self._terms.get(code, Fraction(0))

    def __len__(self) -> int:
        """Get the number of terms."""
        return len(self._terms)

    def __bool__(self) -> bool:
        """Check if nonzero."""
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        """Compare coefficient maps."""
        if not isinstance(other, MonomialCombination):
            return NotImplemented

        return self._terms == other._terms

    def __hash__(self) -> int:
        """Get the hash."""
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: MonomialCombination) -> MonomialCombination:
        """Add."""
        return MonomialCombination([*self.items(), *other.items()])

    def __neg__(self) -> MonomialCombination:
        """Negate."""
        return MonomialCombination({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: MonomialCombination) -> MonomialCombination:
        """Subtract."""
        return self + -other

    def scale(self, factor: Any) -> MonomialCombination:
        """Multiply by a rational."""
        return MonomialCombination(
            {k: v * factor for k, v in self._terms.items()},
        )

    def map_codes(self, function: Callable[[int], int]) -> MonomialCombination:
        """Rename the monomials."""
        return MonomialCombination(
            [(function(k), v) for k, v in self._terms.items()],
        )

    def __str__(self) -> str:
        """Convert to string, e.g. ``"3/2*Y[5] + -1*Y[0]"``."""
        if not self._terms:
            return "0"

        return " + ".join(
            f"{coef}*Y[{code}]"
            for code, coef in sorted(self._terms.items(), reverse=True)
        )

    def __repr__(self) -> str:
        """Get the representation."""
        return f"MonomialCombination({dict(self.items())!r})"


MonomialCombination.__module__ = "effalg"


@dataclass(frozen=True)
class FieldQuotient:
    """A formal quotient of monomial combinations.

    :param num: the numerator
    :param den: the denominator, nonzero
    """

    num: MonomialCombination
    den: MonomialCombination

    def __post_init__(self) -> None:
        """Reject a zero denominator."""
        if not self.den:
            msg: str = "Zero denominator"
            raise ZeroDivisionError(msg)

    def __str__(self) -> str:
        """Convert to string."""
        return f"({self.num}) / ({self.den})"


FieldQuotient.__module__ = "effalg"


def ring_mul(a: MonomialCombination, b: MonomialCombination,
             group: DiagramStream, stage: int) -> MonomialCombination | None:
    """Multiply in the group ring through the committed sums.

    ``Y[m] * Y[n] = Y[k]`` exactly when ``m + n = k`` is committed.

    :param a: the first factor
    :param b: the second factor
    :param group: the group diagram
    :param stage: the stage to read facts at
    :return: the product, or ``None`` if a needed sum is unknown
    """
    terms: list[tuple[int, Fraction]] = []
    for m, x in a.items():
        for n, y in b.items():
            if (k := group.lookup(stage, "+", (m, n))) is None:
                return None

            terms.append((k, x * y))

    return MonomialCombination(terms)


def quotient_eq(p: FieldQuotient, q: FieldQuotient, group: DiagramStream,
                stage: int) -> bool | None:
    """Compare quotients by cross multiplication, ``None`` if unknown."""
    left: MonomialCombination | None = ring_mul(p.num, q.den, group, stage)
    right: MonomialCombination | None = ring_mul(q.num, p.den, group, stage)
    if left is None or right is None:
        return None

    return left == right


def _quotient_op(sym: str, p: FieldQuotient, q: FieldQuotient,
                 group: DiagramStream, stage: int) -> FieldQuotient | None:
    den: MonomialCombination | None = ring_mul(p.den, q.den, group, stage)
    if sym == "*":
        num: MonomialCombination | None = ring_mul(p.num, q.num, group, stage)
    else:
        left: MonomialCombination | None = ring_mul(p.num, q.den, group, stage)
        right: MonomialCombination | None = ring_mul(
            q.num, p.den, group, stage,
        )
        if left is None or right is None:
            return None

        num = left + right if sym == "+" else left - right

    if num is None or den is None:
        return None

    return FieldQuotient(num, den)


def monomial_map(code: int, group: DiagramStream, stage: int,
                 ) -> FieldQuotient | None:
    """Send a group element to its monomial ``Y[g] / Y[e]``."""
    if (e := group.lookup(stage, "e", ())) is None:
        return None

    return FieldQuotient(
        MonomialCombination.monomial(code), MonomialCombination.monomial(e),
    )


class PhiField(ClosureStream):
    """The field of fractions of the group ring, with universe omega.

    Element ``0`` is zero, element ``1`` is ``Y[e]`` and the monomial of
    group code ``s`` is seeded at stage ``s``. Quotients whose equality with
    an earlier element can't be decided yet wait for more group facts.

    :param group: the group diagram
    """

    def __init__(self, group: DiagramStream) -> None:
        """Create a new field of fractions."""
        super().__init__(f"Phi({getattr(group, 'name', 'G')})")
        self.group: DiagramStream = group
        self._next_monomial: int = 0

    def _seeds(self, stage: int) -> Iterable[Any]:
        if (e := self.group.lookup(stage, "e", ())) is None:
            return

        unit: MonomialCombination = MonomialCombination.monomial(e)
        if not self._next_monomial:
            yield FieldQuotient(MonomialCombination(), unit)
            yield FieldQuotient(unit, unit)

        while self._next_monomial <= stage:
            yield FieldQuotient(
                MonomialCombination.monomial(self._next_monomial), unit,
            )
            self._next_monomial += 1

    def _equal(self, stage: int, a: Any, b: Any) -> bool | None:
        if not a.num or not b.num:
            return not a.num and not b.num

        return quotient_eq(a, b, self.group, stage)

    def _operate(self, stage: int, sym: str, a: Any, b: Any) -> Any:
        if (res := _quotient_op(sym, a, b, self.group, stage)) is None:
            raise Pending

        return res

    def _inverse(self, stage: int, a: Any) -> Any | None:
        return FieldQuotient(a.den, a.num) if a.num else None

    def monomial(self, group_code: int, stage: int) -> int | None:
        """Get the code of the monomial of a group element."""
        if (value := monomial_map(group_code, self.group, stage)) is None:
            return None

        return self.code_of(value, stage)


PhiField.__module__ = "effalg"


def phi_object(group: DiagramStream) -> PhiField:
    """Embed a torsion-free abelian group in a field of the same rank.

    The monomial ``Y[g]`` of a basis element becomes a transcendental and
    ``Y[g]^n = Y[n * g]``, so the roots of ``Y[g]`` in the output mirror the
    divisibility of ``g``.
    """
    return PhiField(group)


def check_homomorphism(source: DiagramStream,
                       function: Callable[[int], int | None],
                       target: DiagramStream, stage: int) -> int:
    """Check a code map against the committed sums of the source.

    :raises MorphismViolationError: when a committed sum isn't preserved
    :return: the number of sums checked
    """
    checked: int = 0
    for fact, _ in source.facts(stage):
        images: list[int | None] = [
            function(code) for code in (*fact.args, fact.res)
        ]
        if None in images:
            continue

        *args, res = images
        image: int | None = target.lookup(
            stage, fact.sym, tuple(args),  # type: ignore
        )
        if image is not None and image != res:
            msg: str = "The group map doesn't preserve a fact"
            raise MorphismViolationError(msg, fact)

        checked += image is not None

    return checked


def phi_morphism(source: PhiField, function: Callable[[int], int | None],
                 target: PhiField) -> FieldMorphism:
    """Map ``Y[n]`` to ``Y[g(n)]`` between fields of fractions.

    :param source: the field of the domain group
    :param function: the group map on codes, ``None`` if not yet known
    :param target: the field of the codomain group
    :raises MorphismViolationError: when the group map breaks a committed
                                    fact
    :return: the map on field codes
    """
    checked: list[int] = [-1]

    def image(code: int, stage: int) -> int | None:
        if stage > checked[0]:
            check_homomorphism(source.group, function, target.group, stage)
            checked[0] = stage

        value: FieldQuotient = source.element(code, stage)
        codes: list[int] = [*value.num.support, *value.den.support]
        images: dict[int, int | None] = {k: function(k) for k in codes}
        if None in images.values():
            return None

        return target.code_of(FieldQuotient(
            value.num.map_codes(images.__getitem__),  # type: ignore
            value.den.map_codes(images.__getitem__),  # type: ignore
        ), stage)

    return FieldMorphism(source, target, image, "Phi(g)")


@dataclass
class ProbeReport:
    """The outcome of a zero divisor probe.

    :param trials: the number of sampled pairs
    :param unknown: the pairs whose product needed uncommitted sums
    :param violations: nonzero pairs with a zero product
    """

    trials: int
    unknown: int = 0
    violations: list[tuple[MonomialCombination, MonomialCombination]] = field(
        default_factory=list,
    )

    @property
    def clean(self) -> bool:
        """Whether no zero divisor was found."""
        return not self.violations


ProbeReport.__module__ = "effalg"


def _sample(rng: Random, codes: int, support: int) -> MonomialCombination:
    size: int = rng.randint(1, support)
    return MonomialCombination([
        (rng.randrange(codes), Fraction(rng.choice((-3, -2, -1, 1, 2, 3)),
                                        rng.randint(1, 3)))
        for _ in range(size)
    ])


def zero_divisor_probe(trials: int, group: DiagramStream, stage: int,
                       seed: int = 0, support: int = 3) -> ProbeReport:
    """Multiply random nonzero combinations and look for a zero product.

    :param trials: the number of pairs
    :param group: the group diagram
    :param stage: the stage to read facts at, bounding the sampled codes
    :param seed: the random seed
    :param support: the largest number of terms per combination
    :return: the report
    """
    rng: Random = Random(seed)
    report: ProbeReport = ProbeReport(trials)
    for _ in range(trials):
        a: MonomialCombination = _sample(rng, stage + 1, support)
        b: MonomialCombination = _sample(rng, stage + 1, support)
        if not a or not b:
            continue

        if (res := ring_mul(a, b, group, stage)) is None:
            report.unknown += 1
        elif not res:
            logger.warning("Zero product of %s and %s", a, b)
            report.violations.append((a, b))

    return report


def _power(value: FieldQuotient, n: int, group: DiagramStream, stage: int,
           ) -> FieldQuotient | None:
    result: FieldQuotient | None = value
    for _ in range(n - 1):
        if result is None:
            return None

        result = _quotient_op("*", result, value, group, stage)

    return result


def root_evidence(field_copy: PhiField, code: int, n: int, stage: int,
                  search: int | None = None) -> int | None:
    """Search the first codes for an ``n``-th root of an element.

    :param field_copy: the field of fractions
    :param code: the element
    :param n: the degree of the root
    :param stage: the stage to read facts at
    :param search: the number of codes to try, by default ``stage + 1``
    :return: the code of a root, or ``None`` if none is seen
    """
    target: FieldQuotient = field_copy.element(code, stage)
    bound: int = stage + 1 if search is None else search
    for y in range(min(bound, len(field_copy.elements))):
        power: FieldQuotient | None = _power(
            field_copy.elements[y], n, field_copy.group, stage,
        )
        if power is not None and quotient_eq(
            power, target, field_copy.group, stage,
        ):
            return y

    return None
