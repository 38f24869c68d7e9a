# Copyright (C) 2024 Nice Zombies
"""Infinitary sentences and their bounded evaluation."""
from __future__ import annotations

__all__: list[str] = [
    "And",
    "App",
    "Atom",
    "Const",
    "CountableAnd",
    "CountableOr",
    "Exists",
    "Forall",
    "InfSentence",
    "IntConst",
    "InvalidBasisError",
    "LinearExprSet",
    "Multiple",
    "Or",
    "Power",
    "RootFormulaSet",
    "Term",
    "Var",
    "Verdict",
    "eval_bounded",
    "format_sentence",
    "scott_fd",
    "scott_tfab",
    "sentence_to_json",
    "sigma_level",
]

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import IntEnum
from functools import reduce
from itertools import count, islice, product
from math import gcd
from typing import TYPE_CHECKING, Any

from effalg._fields import integer_constant
from effalg._tfab import (
    _zigzag, combination, independence_check, multiple,
    witnessed_divisibility,
)

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Mapping, Sequence

    from effalg._diagrams import DiagramStream

    _Env = Mapping[str, int]

logger: logging.Logger = logging.getLogger(__name__)


class InvalidBasisError(ValueError):
    """A basis with a committed dependence relation.

    :param basis: the codes
    :param relation: the coefficients of the relation
    """

    def __init__(self, basis: Sequence[int], relation: object) -> None:
        """Create a new invalid basis error."""
        super().__init__(f"Basis {list(basis)} satisfies {relation}")
        self.basis: tuple[int, ...] = tuple(basis)
        self.relation: object = relation


InvalidBasisError.__module__ = "effalg"


class Verdict(IntEnum):
    """A three-valued verdict, refined by whether it depends on the bounds.

    ``TRUE`` and ``FALSE`` never change at larger stages and bounds.
    """

    FALSE = 0
    FALSE_AT_BOUND = 1
    UNKNOWN = 2
    TRUE_AT_BOUND = 3
    TRUE = 4

    @property
    def sound(self) -> bool:
        """Whether the verdict is final."""
        return self in {Verdict.TRUE, Verdict.FALSE}


Verdict.__module__ = "effalg"


class Term(ABC):
    """A term, evaluated through the committed facts of a diagram."""

    @abstractmethod
    def evaluate(self, stream: DiagramStream, stage: int, env: _Env,
                 ) -> int | None:
        """Get the code of the value, ``None`` if unknown."""


@dataclass(frozen=True)
class Var(Term):
    """A variable."""

    name: str

    def evaluate(self, stream: DiagramStream, stage: int, env: _Env,
                 ) -> int | None:
        """Get the code of the value, ``None`` if unknown."""
        return env[self.name]

    def __str__(self) -> str:
        """Convert to string."""
        return self.name


@dataclass(frozen=True)
class Const(Term):
    """A constant of the signature, such as ``e``, ``0`` or ``1``."""

    sym: str

    def evaluate(self, stream: DiagramStream, stage: int, env: _Env,
                 ) -> int | None:
        """Get the code of the value, ``None`` if unknown."""
        return stream.lookup(stage, self.sym, ())

    def __str__(self) -> str:
        """Convert to string."""
        return self.sym


@dataclass(frozen=True)
class App(Term):
    """An operation applied to terms."""

    sym: str
    args: tuple[Term, ...]

    def evaluate(self, stream: DiagramStream, stage: int, env: _Env,
                 ) -> int | None:
        """Get the code of the value, ``None`` if unknown."""
        codes: list[int | None] = [
            arg.evaluate(stream, stage, env) for arg in self.args
        ]
        if None in codes:
            return None

        return stream.lookup(stage, self.sym, tuple(codes))  # type: ignore

    def __str__(self) -> str:
        """Convert to string."""
        if len(self.args) == 2:
            left, right = self.args
            return f"({left} {self.sym} {right})"

        return f"{self.sym}({', '.join(map(str, self.args))})"


@dataclass(frozen=True)
class Multiple(Term):
    """An integer multiple in a group."""

    factor: int
    term: Term

    def evaluate(self, stream: DiagramStream, stage: int, env: _Env,
                 ) -> int | None:
        """Get the code of the value, ``None`` if unknown."""
        if (code := self.term.evaluate(stream, stage, env)) is None:
            return None

        return multiple(stream, stage, self.factor, code)

    def __str__(self) -> str:
        """Convert to string."""
        return f"{self.factor}{self.term}"


@dataclass(frozen=True)
class IntConst(Term):
    """An integer in a field."""

    value: int

    def evaluate(self, stream: DiagramStream, stage: int, env: _Env,
                 ) -> int | None:
        """Get the code of the value, ``None`` if unknown."""
        return integer_constant(stream, stage, self.value)

    def __str__(self) -> str:
        """Convert to string."""
        return str(self.value)


@dataclass(frozen=True)
class Power(Term):
    """A positive power in a field."""

    term: Term
    exponent: int

    def evaluate(self, stream: DiagramStream, stage: int, env: _Env,
                 ) -> int | None:
        """Get the code of the value, ``None`` if unknown."""
        if (base := self.term.evaluate(stream, stage, env)) is None:
            return None

        result: int | None = base
        for _ in range(self.exponent - 1):
            if result is None:
                return None

            result = stream.lookup(stage, "*", (result, base))

        return result

    def __str__(self) -> str:
        """Convert to string."""
        return f"{self.term}^{self.exponent}"


class InfSentence(ABC):
    """A formula of infinitary logic with computable conjunctions."""


@dataclass(frozen=True)
class Atom(InfSentence):
    """An equation, or an inequation when negated."""

    lhs: Term
    rhs: Term
    negated: bool = False

    def __str__(self) -> str:
        """Convert to string."""
        return f"{self.lhs} {'!=' if self.negated else '='} {self.rhs}"


@dataclass(frozen=True)
class And(InfSentence):
    """A finite conjunction."""

    children: tuple[InfSentence, ...]


@dataclass(frozen=True)
class Or(InfSentence):
    """A finite disjunction."""

    children: tuple[InfSentence, ...]


@dataclass(frozen=True)
class Exists(InfSentence):
    """An existential quantifier over a tuple of variables."""

    names: tuple[str, ...]
    body: InfSentence


@dataclass(frozen=True)
class Forall(InfSentence):
    """A universal quantifier over a tuple of variables."""

    names: tuple[str, ...]
    body: InfSentence


@dataclass(frozen=True)
class CountableAnd(InfSentence):
    """A computable conjunction, expanded up to a bound."""

    name: str
    generator: Callable[[int], Sequence[InfSentence]]


@dataclass(frozen=True)
class CountableOr(InfSentence):
    """A computable disjunction, expanded up to a bound."""

    name: str
    generator: Callable[[int], Sequence[InfSentence]]


for _cls in (Term, Var, Const, App, Multiple, IntConst, Power, InfSentence,
             Atom, And, Or, Exists, Forall, CountableAnd, CountableOr):
    _cls.__module__ = "effalg"


@dataclass(frozen=True)
class _Bounds:
    stream: DiagramStream
    stage: int
    witnesses: int
    children: int


def _evaluate(node: InfSentence, bounds: _Bounds, env: _Env) -> Verdict:
    if isinstance(node, Atom):
        lhs: int | None = node.lhs.evaluate(bounds.stream, bounds.stage, env)
        rhs: int | None = node.rhs.evaluate(bounds.stream, bounds.stage, env)
        if lhs is None or rhs is None:
            return Verdict.UNKNOWN

        return Verdict.TRUE if (lhs == rhs) != node.negated else Verdict.FALSE

    if isinstance(node, (And, Or)):
        return _combine(
            node.children, bounds, env, conjunction=isinstance(node, And),
            exact=True,
        )

    if isinstance(node, (CountableAnd, CountableOr)):
        return _combine(
            node.generator(bounds.children), bounds, env,
            conjunction=isinstance(node, CountableAnd), exact=False,
        )

    if isinstance(node, (Exists, Forall)):
        branches: Iterator[InfSentence] = (_Bound(node.body, dict(zip(
            node.names, codes,
        ))) for codes in product(
            range(bounds.witnesses), repeat=len(node.names),
        ))
        return _combine(
            branches, bounds, env, conjunction=isinstance(node, Forall),
            exact=False,
        )

    if isinstance(node, _Bound):
        return _evaluate(node.body, bounds, {**env, **node.values})

    msg: str = f"Unknown formula {node!r}"
    raise TypeError(msg)


@dataclass(frozen=True)
class _Bound(InfSentence):
    body: InfSentence
    values: dict[str, int]


def _combine(children: Any, bounds: _Bounds, env: _Env, *,
             conjunction: bool, exact: bool) -> Verdict:
    # exact combinations range over all their children; the others over
    # the children seen within the bounds
    decisive: Verdict = Verdict.FALSE if conjunction else Verdict.TRUE
    seen: bool = False
    result: Verdict = Verdict.TRUE if conjunction else Verdict.FALSE
    for child in children:
        seen = True
        verdict: Verdict = _evaluate(child, bounds, env)
        if verdict == decisive:
            return verdict

        result = min(result, verdict) if conjunction else max(result, verdict)

    if exact:
        return result

    if not seen:
        return Verdict.UNKNOWN

    if result == Verdict.TRUE:
        return Verdict.TRUE_AT_BOUND

    if result == Verdict.FALSE:
        return Verdict.FALSE_AT_BOUND

    return result


def eval_bounded(sentence: InfSentence, stream: DiagramStream, stage: int,
                 witness_bound: int, generator_bound: int) -> Verdict:
    """Evaluate a sentence on the facts committed by a stage.

    Quantifiers range over the codes below the witness bound and computable
    conjunctions and disjunctions over the children their generator lists
    at the generator bound.

    :param sentence: the sentence
    :param stream: the diagram
    :param stage: the stage to read facts at
    :param witness_bound: the number of codes a quantifier tries
    :param generator_bound: the bound passed to the generators
    :return: the verdict, sound when ``TRUE`` or ``FALSE``
    """
    return _evaluate(
        sentence, _Bounds(stream, stage, witness_bound, generator_bound), {},
    )


def _levels(node: InfSentence, sample: int) -> tuple[int, int]:
    # the least n such that the node is Sigma_n, and Pi_n
    if isinstance(node, Atom):
        return 0, 0

    if isinstance(node, _Bound):
        return _levels(node.body, sample)

    if isinstance(node, (And, Or)):
        levels: list[tuple[int, int]] = [
            _levels(child, sample) for child in node.children
        ]
        return (max((s for s, _ in levels), default=0),
                max((p for _, p in levels), default=0))

    if isinstance(node, (Exists, Forall)):
        children: list[InfSentence] = [node.body]
    else:
        children = list(node.generator(sample))  # type: ignore

    level: int = 0
    for child in children:
        sigma, pi = _levels(child, sample)
        if isinstance(node, (Exists, CountableOr)):
            level = max(level, min(pi + 1, max(sigma, 1)))
        else:
            level = max(level, min(sigma + 1, max(pi, 1)))

    if isinstance(node, (Exists, CountableOr)):
        return level, level + 1

    return level + 1, level


def sigma_level(sentence: InfSentence, sample: int = 2) -> int:
    """Get the least ``n`` such that a sentence has the shape of ``Sigma_n``.

    Generators are expanded at the sample bound.
    """
    return _levels(sentence, sample)[0]


def _vars(prefix: str, size: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(size))


def _sum(terms: Sequence[Term], zero: Term) -> Term:
    if not terms:
        return zero

    return reduce(lambda a, b: App("+", (a, b)), terms)


def _linear(coeffs: Sequence[int], names: Sequence[str]) -> Term:
    return _sum([
        Multiple(c, Var(name)) for c, name in zip(coeffs, names) if c
    ], Const("e"))


def _group_axioms() -> InfSentence:
    a, b, c, e = Var("a"), Var("b"), Var("c"), Const("e")

    def plus(x: Term, y: Term) -> Term:
        return App("+", (x, y))

    def torsion_free(bound: int) -> list[InfSentence]:
        return [
            Forall(("a",), Or((Atom(Multiple(n, a), e, negated=True),
                               Atom(a, e))))
            for n in range(2, bound + 2)
        ]

    return And((
        Forall(("a", "b"), Atom(plus(a, b), plus(b, a))),
        Forall(("a", "b", "c"), Atom(plus(plus(a, b), c),
                                     plus(a, plus(b, c)))),
        Forall(("a",), Atom(plus(a, e), a)),
        Forall(("a",), Atom(plus(a, App("-", (a,))), e)),
        CountableAnd("torsion-free", torsion_free),
    ))


def _weighted_vectors(size: int, weight: int) -> Iterator[tuple[int, ...]]:
    values: list[int] = sorted(range(-weight, weight + 1), key=_zigzag)
    for vector in product(values, repeat=size):
        if max(map(abs, vector), default=0) == weight:
            yield vector


class LinearExprSet:
    """The reduced ``(m, m_1, ..., m_r)`` with ``m y = sum(m_i a_i)`` solvable.

    Expressions are ordered by weight ``max(|m|, |m_i|)``, then ``m``, then
    the ``m_i`` in the order ``0, 1, -1, ...``.

    :param stream: a group diagram
    :param basis: the codes of the ``a_i``
    :param stage: the stage to search witnesses at
    """

    def __init__(self, stream: DiagramStream, basis: Sequence[int],
                 stage: int) -> None:
        """Create a new set of linear expressions."""
        self.stream: DiagramStream = stream
        self.basis: tuple[int, ...] = tuple(basis)
        self.stage: int = stage

    @staticmethod
    def candidates(rank: int, weight: int) -> list[tuple[int, ...]]:
        """Get the reduced expressions up to a weight.

        Example:
            >>> from effalg import LinearExprSet
            >>> LinearExprSet.candidates(1, 1)
            [(1, 0), (1, 1), (1, -1)]

        """
        result: list[tuple[int, ...]] = []
        for w in range(1, weight + 1):
            level: list[tuple[int, ...]] = []
            for m in range(1, w + 1):
                for rest in product(
                    sorted(range(-w, w + 1), key=_zigzag), repeat=rank,
                ):
                    vector: tuple[int, ...] = (m, *rest)
                    if max(map(abs, vector)) == w and gcd(*vector) == 1:
                        level.append(vector)

            result += level

        return result

    def present(self, expr: Sequence[int]) -> bool:
        """Check if ``m y = sum(m_i a_i)`` has a witness by the stage."""
        m, *coeffs = expr
        target: int | None = combination(
            self.stream, self.stage, coeffs, self.basis,
        )
        return target is not None and witnessed_divisibility(
            self.stream, target, m, self.stage,
        ) is not None

    def members(self, weight: int) -> list[tuple[int, ...]]:
        """Get the present expressions up to a weight."""
        return [
            expr for expr in self.candidates(len(self.basis), weight)
            if self.present(expr)
        ]


LinearExprSet.__module__ = "effalg"


def _clause(expr: Sequence[int], names: Sequence[str]) -> Atom:
    m, *coeffs = expr
    return Atom(Multiple(m, Var("y")), _linear(coeffs, names))


def _basis_sentence(axioms: InfSentence, names: tuple[str, ...],
                    independence: InfSentence,
                    clauses: Callable[[int], Sequence[Atom]]) -> InfSentence:
    def presence(bound: int) -> list[InfSentence]:
        return [Exists(("y",), clause) for clause in clauses(bound)]

    def covering(bound: int) -> list[InfSentence]:
        return list(clauses(bound))

    return And((axioms, Exists(names, And((
        independence,
        CountableAnd("presence", presence),
        Forall(("y",), CountableOr("covering", covering)),
    )))))


def scott_tfab(stream: DiagramStream, basis: Sequence[int], stage: int,
               relation_bound: int = 3) -> InfSentence:
    """Build the Scott sentence of a torsion-free group of finite rank.

    The sentence says: the axioms hold, and some independent tuple divides
    exactly as the basis does and every element is a rational combination
    of it.

    :param stream: the group diagram
    :param basis: a maximal independent tuple of codes
    :param stage: the stage whose witnesses make up the expression set
    :param relation_bound: the largest coefficient tried when refuting the
                           independence of the basis
    :raises InvalidBasisError: when a committed relation holds of the basis
    :return: the sentence
    """
    if relation := independence_check(stream, basis, stage, relation_bound):
        raise InvalidBasisError(basis, relation)

    names: tuple[str, ...] = _vars("x", len(basis))
    expressions: LinearExprSet = LinearExprSet(stream, basis, stage)

    def independence(bound: int) -> list[InfSentence]:
        return [
            Atom(_linear(coeffs, names), Const("e"), negated=True)
            for w in range(1, bound + 1)
            for coeffs in _weighted_vectors(len(names), w)
            if next(c for c in coeffs if c) > 0
        ]

    def clauses(bound: int) -> list[Atom]:
        return [_clause(expr, names) for expr in expressions.members(bound)]

    logger.debug("Scott sentence of %r over %s", stream, list(basis))
    return _basis_sentence(
        _group_axioms(), names, CountableAnd("independence", independence),
        clauses,
    )


def _field_axioms() -> InfSentence:
    a, b, c = Var("a"), Var("b"), Var("c")
    zero, one = Const("0"), Const("1")

    def op(sym: str, x: Term, y: Term) -> Term:
        return App(sym, (x, y))

    def characteristic(bound: int) -> list[InfSentence]:
        return [
            Atom(IntConst(n), zero, negated=True) for n in range(1, bound + 1)
        ]

    return And((
        Atom(zero, one, negated=True),
        Forall(("a", "b"), And((
            Atom(op("+", a, b), op("+", b, a)),
            Atom(op("*", a, b), op("*", b, a)),
            Atom(op("+", op("-", a, b), b), a),
        ))),
        Forall(("a", "b", "c"), And((
            Atom(op("+", op("+", a, b), c), op("+", a, op("+", b, c))),
            Atom(op("*", op("*", a, b), c), op("*", a, op("*", b, c))),
            Atom(op("*", a, op("+", b, c)),
                 op("+", op("*", a, b), op("*", a, c))),
        ))),
        Forall(("a",), And((
            Atom(op("+", a, zero), a), Atom(op("*", a, one), a),
        ))),
        Forall(("a",), Or((
            Atom(a, zero), Exists(("b",), Atom(op("*", a, b), one)),
        ))),
        CountableAnd("characteristic-zero", characteristic),
    ))


def _monomial(exponents: Sequence[int], names: Sequence[str]) -> Term | None:
    factors: list[Term] = [
        Var(name) if e == 1 else Power(Var(name), e)
        for e, name in zip(exponents, names) if e
    ]
    if not factors:
        return None

    return reduce(lambda x, y: App("*", (x, y)), factors)


def _scaled(coef: int, term: Term | None) -> Term:
    if term is None:
        return IntConst(coef)

    return term if coef == 1 else App("*", (IntConst(coef), term))


def _polynomials(rank: int) -> Iterator[dict[tuple[int, ...], int]]:
    for w in count(1):
        monomials: list[tuple[int, ...]] = list(
            product(range(w + 1), repeat=rank),
        )
        for coeffs in product(
            sorted(range(-w, w + 1), key=_zigzag), repeat=len(monomials),
        ):
            poly: dict[tuple[int, ...], int] = {
                mono: c for mono, c in zip(monomials, coeffs) if c
            }
            if not any(any(mono) for mono in poly):
                continue

            top: int = max(
                max(map(abs, poly.values())),
                max(max(mono) for mono in poly),
            )
            if top == w and next(iter(poly.values())) > 0:
                yield poly


def _poly_term(poly: Mapping[tuple[int, ...], int],
               names: Sequence[str]) -> Term:
    return _sum([
        _scaled(c, _monomial(mono, names)) for mono, c in poly.items()
    ], Const("0"))


class RootFormulaSet:
    """The formulas ``exists y: y^d = c * x^e`` true of a tuple.

    Formulas are ordered by weight ``max(d, |c|, e_i)``, then ``d``, ``c``
    and ``e``; a formula is present once a root is committed among the
    codes up to the stage.

    :param stream: a field diagram
    :param basis: the codes of the tuple
    :param stage: the stage to search witnesses at
    """

    def __init__(self, stream: DiagramStream, basis: Sequence[int],
                 stage: int) -> None:
        """Create a new set of root formulas."""
        self.stream: DiagramStream = stream
        self.basis: tuple[int, ...] = tuple(basis)
        self.stage: int = stage

    @staticmethod
    def candidates(rank: int, weight: int,
                   ) -> list[tuple[int, int, tuple[int, ...]]]:
        """Get the formulas ``(d, c, e)`` up to a weight."""
        result: list[tuple[int, int, tuple[int, ...]]] = []
        for w in range(1, weight + 1):
            for d in range(1, w + 1):
                for c in sorted(range(-w, w + 1), key=_zigzag):
                    if not c:
                        continue

                    for e in product(range(w + 1), repeat=rank):
                        if max(d, abs(c), *e) == w:
                            result.append((d, c, e))

        return result

    def target(self, formula: tuple[int, int, tuple[int, ...]]) -> Term:
        """Get the term ``c * x^e`` of a formula."""
        _, c, e = formula
        return _scaled(c, _monomial(e, _vars("x", len(self.basis))))

    def present(self, formula: tuple[int, int, tuple[int, ...]]) -> bool:
        """Check if a root is committed by the stage."""
        env: dict[str, int] = dict(zip(_vars("x", len(self.basis)),
                                       self.basis))
        value: int | None = self.target(formula).evaluate(
            self.stream, self.stage, env,
        )
        if value is None:
            return False

        power: Power = Power(Var("y"), formula[0])
        return any(
            power.evaluate(self.stream, self.stage, {"y": y}) == value
            for y in range(self.stage + 1)
        )

    def members(self, weight: int) -> list[tuple[int, int, tuple[int, ...]]]:
        """Get the present formulas up to a weight."""
        return [
            formula for formula in self.candidates(len(self.basis), weight)
            if self.present(formula)
        ]


RootFormulaSet.__module__ = "effalg"


def scott_fd(stream: DiagramStream, basis: Sequence[int], stage: int,
             relation_bound: int = 20) -> InfSentence:
    """Build the Scott sentence of a field of finite transcendence degree.

    Linear independence is replaced by algebraic independence and the
    divisibility clauses by root formulas.

    :param stream: the field diagram
    :param basis: a transcendence basis, possibly empty
    :param stage: the stage whose witnesses make up the formula set
    :param relation_bound: the number of integer polynomials tried when
                           refuting the independence of the basis
    :raises InvalidBasisError: when a committed polynomial relation holds
    :return: the sentence
    """
    names: tuple[str, ...] = _vars("x", len(basis))
    zero: Const = Const("0")
    if basis:
        env: dict[str, int] = dict(zip(names, basis))
        zero_code: int | None = zero.evaluate(stream, stage, env)
        for poly in islice(_polynomials(len(basis)), relation_bound):
            value: int | None = _poly_term(poly, names).evaluate(
                stream, stage, env,
            )
            if value is not None and value == zero_code:
                raise InvalidBasisError(basis, poly)

    formulas: RootFormulaSet = RootFormulaSet(stream, basis, stage)

    def independence(bound: int) -> list[InfSentence]:
        if not names:
            return []

        return [
            Atom(_poly_term(poly, names), zero, negated=True)
            for poly in islice(_polynomials(len(names)), bound)
        ]

    def clauses(bound: int) -> list[Atom]:
        return [
            Atom(Power(Var("y"), formula[0]), formulas.target(formula))
            for formula in formulas.members(bound)
        ]

    logger.debug("Scott sentence of %r over %s", stream, list(basis))
    return _basis_sentence(
        _field_axioms(), names, CountableAnd("independence", independence),
        clauses,
    )


def sentence_to_json(node: InfSentence, bound: int) -> dict[str, Any]:
    """Convert a sentence to a JSON tree, expanding generators at a bound."""
    if isinstance(node, Atom):
        return {
            "type": "atom", "lhs": str(node.lhs), "rhs": str(node.rhs),
            "negated": node.negated,
        }

    if isinstance(node, (And, Or)):
        return {
            "type": "and" if isinstance(node, And) else "or",
            "children": [
                sentence_to_json(child, bound) for child in node.children
            ],
        }

    if isinstance(node, (Exists, Forall)):
        return {
            "type": "exists" if isinstance(node, Exists) else "forall",
            "vars": list(node.names),
            "body": sentence_to_json(node.body, bound),
        }

    if isinstance(node, (CountableAnd, CountableOr)):
        return {
            "type": (
                "countable-and" if isinstance(node, CountableAnd)
                else "countable-or"
            ),
            "name": node.name,
            "bound": bound,
            "children": [
                sentence_to_json(child, bound)
                for child in node.generator(bound)
            ],
        }

    msg: str = f"Unknown formula {node!r}"
    raise TypeError(msg)


def format_sentence(node: InfSentence, bound: int, indent: int = 0) -> str:
    """Pretty print a sentence, expanding generators at a bound."""
    pad: str = "  " * indent
    if isinstance(node, Atom):
        return f"{pad}{node}"

    if isinstance(node, (Exists, Forall)):
        quantifier: str = "exists" if isinstance(node, Exists) else "forall"
        return (
            f"{pad}{quantifier} {', '.join(node.names)}:\n"
            + format_sentence(node.body, bound, indent + 1)
        )

    if isinstance(node, (And, Or)):
        header: str = "and" if isinstance(node, And) else "or"
        children: Sequence[InfSentence] = node.children
    else:
        header = (
            f"AND[{node.name}]" if isinstance(node, CountableAnd)  # type: ignore
            else f"OR[{node.name}]"  # type: ignore
        )
        children = node.generator(bound)  # type: ignore

    lines: list[str] = [f"{pad}{header}:"]
    lines += [format_sentence(child, bound, indent + 1) for child in children]
    if len(lines) == 1:
        lines.append(f"{pad}  (none yet)")

    return "\n".join(lines)
