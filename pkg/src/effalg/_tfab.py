# Copyright (C) 2024 Nice Zombies
"""Torsion-free abelian groups of finite rank."""
from __future__ import annotations

__all__: list[str] = [
    "DivisibilityType",
    "IsoStatus",
    "SubgroupDiagram",
    "SubgroupPresentation",
    "TypeEquivalenceVerdict",
    "add_Z",
    "all_primes_once",
    "cof_to_tfab1",
    "cof_type",
    "combination",
    "direct_sum",
    "e0_to_tfab1",
    "e0_type",
    "height",
    "independence_check",
    "iso_rank1",
    "multiple",
    "nth_prime",
    "prime_position",
    "rank1_from_type",
    "rationals_of_height",
    "witnessed_divisibility",
]

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, inf
from typing import TYPE_CHECKING, Protocol

from sympy import factorint, isprime, prime, primepi

from effalg._diagrams import DerivedStream, pair, unpair
from effalg.signatures import GROUP

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Mapping, Sequence

    from effalg._diagrams import DiagramStream
    from effalg._oracles import Enumeration

    _Vector = tuple[Fraction, ...]

logger: logging.Logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def nth_prime(n: int) -> int:
    """Get prime ``p_n``, counting from ``p_0 = 2``."""
    return int(prime(n + 1))


def prime_position(p: int) -> int:
    """Invert :func:`nth_prime`."""
    return int(primepi(p)) - 1


def height(q: Fraction) -> int:
    """Get ``max(|a|, b)`` for ``q = a/b`` in lowest terms."""
    return max(abs(q.numerator), q.denominator)


@lru_cache(maxsize=None)
def rationals_of_height(h: int) -> tuple[Fraction, ...]:
    """Get the rationals of a given height in canonical order.

    The order is by denominator, then by absolute value, positive first.

    Example:
        >>> from effalg import rationals_of_height
        >>> [str(q) for q in rationals_of_height(2)]
        ['2', '-2', '1/2', '-1/2']

    """
    shell: list[Fraction] = []
    for b in range(1, h + 1):
        for a in range(h + 1):
            if max(a, b) != h or gcd(a, b) != 1:
                continue

            shell.append(Fraction(a, b))
            if a:
                shell.append(Fraction(-a, b))

    return tuple(shell)


@lru_cache(maxsize=None)
def _rationals_upto(h: int) -> tuple[Fraction, ...]:
    return tuple(q for i in range(1, h + 1) for q in rationals_of_height(i))


def _vectors_of_height(h: int, rank: int) -> Iterator[_Vector]:
    for vector in product(_rationals_upto(h), repeat=rank):
        if max(map(height, vector)) == h:
            yield vector


class DivisibilityType:
    """The type of a rank-1 group containing ``1``, with approximations.

    :param approximation: a lower bound for the entry at a prime by a stage,
                          nondecreasing in the stage
    :param limit: the entries, ``inf`` for infinite divisibility, if known
    :param name: a name for reports
    """

    def __init__(
        self,
        approximation: Callable[[int, int], int],
        limit: Callable[[int], float] | None = None,
        name: str = "type",
    ) -> None:
        """Create a new divisibility type."""
        self.approximation: Callable[[int, int], int] = approximation
        self.limit: Callable[[int], float] | None = limit
        self.name: str = name

    def __repr__(self) -> str:
        """Get the representation."""
        return f"DivisibilityType({self.name!r})"

    def at(self, p: int, stage: int) -> int:
        """Get the approximation at a prime by a stage."""
        return self.approximation(p, stage)

    def entry(self, p: int) -> float | None:
        """Get the entry at a prime, ``None`` if only approximations exist."""
        return None if self.limit is None else self.limit(p)

    @classmethod
    def from_function(cls, entries: Callable[[int], float], name: str = "type",
                      ) -> DivisibilityType:
        """Get the type with the given entries.

        At stage ``s`` the first ``s + 1`` primes are visible; infinite
        entries are approximated by ``s``.
        """
        def approximation(p: int, stage: int) -> int:
            if prime_position(p) > stage:
                return 0

            value: float = entries(p)
            return stage if value == inf else int(value)

        return cls(approximation, entries, name)

    @classmethod
    def from_map(cls, entries: Mapping[int, float], name: str | None = None,
                 ) -> DivisibilityType:
        """Get the type with finitely many nonzero entries."""
        for p, value in entries.items():
            if not isprime(p):
                msg: str = f"{p} is not a prime"
                raise ValueError(msg)

            if value != inf and (value < 0 or value != int(value)):
                msg = f"Invalid entry {value} at {p}"
                raise ValueError(msg)

        table: dict[int, float] = dict(entries)
        if name is None:
            name = _format_entries(table) or "0"

        return cls.from_function(lambda p: table.get(p, 0), name)

    @classmethod
    def parse(cls, text: str) -> DivisibilityType:
        """Parse a literal such as ``"2:inf,3:1"``.

        Example:
            >>> from effalg import DivisibilityType
            >>> dyadic = DivisibilityType.parse("2:inf,3:1")
            >>> dyadic.entry(2), dyadic.entry(3), dyadic.entry(5)
            (inf, 1, 0)

        """
        entries: dict[int, float] = {}
        for item in filter(None, (part.strip() for part in text.split(","))):
            key, sep, value = item.partition(":")
            try:
                if not sep:
                    raise ValueError

                p: int = int(key)
                entries[p] = inf if value.strip() in {"inf", "∞"} else int(
                    value,
                )
            except ValueError as exc:
                msg: str = f"Invalid type entry {item!r}"
                raise ValueError(msg) from exc

        return cls.from_map(entries)

    def format(self, count: int) -> str:
        """Format the entries at the first ``count`` primes."""
        if self.limit is None:
            msg: str = "Only types with known entries can be formatted"
            raise ValueError(msg)

        return _format_entries(
            {nth_prime(i): self.limit(nth_prime(i)) for i in range(count)},
            keep_zero=True,
        )


DivisibilityType.__module__ = "effalg"


def _format_entries(entries: Mapping[int, float], *, keep_zero: bool = False,
                    ) -> str:
    return ",".join(
        f"{p}:{'inf' if value == inf else int(value)}"
        for p, value in sorted(entries.items()) if value or keep_zero
    )


def all_primes_once() -> DivisibilityType:
    """Get the type of the group generated by all ``1/p``."""
    return DivisibilityType.from_function(lambda _: 1, "all-primes-once")


class _Ambient(Protocol):
    rank: int

    def admits(self, denominators: tuple[int, ...], stage: int) -> bool:
        """Check if vectors with these denominators belong by a stage."""


class SubgroupPresentation:
    """A direct sum of rank-1 subgroups of the rationals containing ``1``.

    :param types: the types of the summands
    """

    def __init__(self, types: Sequence[DivisibilityType]) -> None:
        """Create a new subgroup presentation."""
        if not types:
            msg: str = "The rank must be positive"
            raise ValueError(msg)

        self.types: tuple[DivisibilityType, ...] = tuple(types)
        self.rank: int = len(types)

    def admits(self, denominators: tuple[int, ...], stage: int) -> bool:
        """Check if vectors with these denominators belong by a stage."""
        for den, kind in zip(denominators, self.types):
            for p, e in factorint(den).items():
                if e > kind.at(p, stage):
                    return False

        return True

    def contains(self, vector: Sequence[Fraction], stage: int) -> bool:
        """Check if a vector belongs to the stage-``s`` group."""
        return self.admits(tuple(q.denominator for q in vector), stage)

    def generators(self, stage: int) -> list[_Vector]:
        """Get the generators committed by a stage."""
        one: Fraction = Fraction(1)
        basis: list[_Vector] = []
        for i, kind in enumerate(self.types):
            unit: list[Fraction] = [Fraction(0)] * self.rank
            unit[i] = one
            basis.append(tuple(unit))
            for j in range(stage + 1):
                p: int = nth_prime(j)
                for e in range(1, kind.at(p, stage) + 1):
                    unit[i] = Fraction(1, p ** e)
                    basis.append(tuple(unit))

        return basis


SubgroupPresentation.__module__ = "effalg"


class SubgroupDiagram(DerivedStream):
    """A free-standing diagram of a subgroup of ``Q^r``.

    At stage ``s`` the vectors of height ``s + 1`` are scanned; admitted
    vectors get the next code, the others wait for their denominators to be
    admitted.

    :param ambient: decides membership by denominators
    :param name: a name for reports
    """

    def __init__(self, ambient: _Ambient, name: str = "G") -> None:
        """Create a new subgroup diagram."""
        super().__init__(GROUP)
        self.ambient: _Ambient = ambient
        self.name: str = name
        self.elements: list[_Vector] = []
        self._codes: dict[_Vector, int] = {}
        self._waiting: dict[tuple[int, ...], list[_Vector]] = {}
        self._admitted: set[tuple[int, ...]] = set()

    def __repr__(self) -> str:
        """Get the representation."""
        return f"SubgroupDiagram({self.name!r})"

    @property
    def rank(self) -> int:
        """The rank of the ambient space."""
        return self.ambient.rank

    def _admit(self, vector: _Vector) -> None:
        self._codes[vector] = len(self.elements)
        self.elements.append(vector)

    def _step(self, stage: int) -> None:
        for dens in list(self._waiting):
            if self.ambient.admits(dens, stage):
                logger.debug("%s admits denominators %s at stage %d",
                             self.name, dens, stage)
                self._admitted.add(dens)
                for vector in self._waiting.pop(dens):
                    self._admit(vector)

        for vector in _vectors_of_height(stage + 1, self.rank):
            dens: tuple[int, ...] = tuple(q.denominator for q in vector)
            if dens in self._admitted:
                self._admit(vector)
            elif dens in self._waiting:
                self._waiting[dens].append(vector)
            elif self.ambient.admits(dens, stage):
                self._admitted.add(dens)
                self._admit(vector)
            else:
                self._waiting[dens] = [vector]

        super()._step(stage)

    def _compute(self, stage: int, sym: str, args: tuple[int, ...],
                 ) -> int | None:
        if any(arg >= len(self.elements) for arg in args):
            return None

        if sym == "e":
            value: _Vector = (Fraction(0),) * self.rank
        elif sym == "-":
            value = tuple(-q for q in self.elements[args[0]])
        else:
            a, b = (self.elements[arg] for arg in args)
            value = tuple(x + y for x, y in zip(a, b))

        return self._codes.get(value)

    def code_of(self, value: Fraction | int | Sequence[Fraction | int],
                stage: int | None = None) -> int | None:
        """Get the code of a vector, or of a rational in rank 1."""
        if stage is not None:
            self.advance(stage)

        if isinstance(value, (int, Fraction)):
            value = (value,)

        return self._codes.get(tuple(Fraction(q) for q in value))

    def value_of(self, code: int) -> _Vector:
        """Get the vector with a code."""
        return self.elements[code]


SubgroupDiagram.__module__ = "effalg"


def rank1_from_type(kind: DivisibilityType) -> SubgroupDiagram:
    """Get the rank-1 group of a type as a free-standing diagram.

    :param kind: the type
    :return: the diagram, generated at stage ``s`` by the ``1/p^e`` with
             ``e`` at most the stage-``s`` approximation
    """
    return SubgroupDiagram(SubgroupPresentation([kind]), kind.name)


def direct_sum(kinds: Sequence[DivisibilityType]) -> SubgroupDiagram:
    """Get a direct sum of rank-1 groups as a free-standing diagram."""
    return SubgroupDiagram(
        SubgroupPresentation(kinds), "+".join(kind.name for kind in kinds),
    )


class IsoStatus(Enum):
    """The status of a bounded isomorphism check."""

    ISOMORPHIC = "isomorphic"
    NON_ISOMORPHIC = "non-isomorphic"
    UNKNOWN_AT_BOUND = "unknown-at-bound"


IsoStatus.__module__ = "effalg"


@dataclass(frozen=True)
class TypeEquivalenceVerdict:
    """A bounded verdict on the isomorphism of two rank-1 groups.

    :param status: the verdict
    :param witness: the differing primes with both entries
    :param reason: a human readable explanation
    """

    status: IsoStatus
    witness: tuple[tuple[int, float, float], ...]
    reason: str


TypeEquivalenceVerdict.__module__ = "effalg"


def _estimate(kind: DivisibilityType, p: int, bound: int,
              ) -> tuple[float, bool]:
    if (value := kind.entry(p)) is not None:
        return value, True

    return kind.at(p, bound), False


def iso_rank1(a: DivisibilityType, b: DivisibilityType, bound: int,
              threshold: int | None = None) -> TypeEquivalenceVerdict:
    """Compare two rank-1 types at the first ``bound`` primes.

    Entries known only through approximations never certify a verdict, a
    difference between them leaves the check unknown at the bound.

    :param a: the first type
    :param b: the second type
    :param bound: the number of primes to inspect
    :param threshold: the number of differing primes certifying
                      non-isomorphism, by default half the bound
    :return: the verdict

    Example:
        >>> from effalg import DivisibilityType, iso_rank1
        >>> a = DivisibilityType.parse("2:inf")
        >>> iso_rank1(a, DivisibilityType.parse("2:inf,3:1"), 10).status
        <IsoStatus.ISOMORPHIC: 'isomorphic'>

    """
    if bound < 1:
        msg: str = "The bound must be positive"
        raise ValueError(msg)

    if threshold is None:
        threshold = max(bound // 2, 2)

    mismatches: list[tuple[int, float, float]] = []
    uncertified: list[int] = []
    last: int = -1
    for i in range(bound):
        p: int = nth_prime(i)
        x, x_known = _estimate(a, p, bound)
        y, y_known = _estimate(b, p, bound)
        if x == y:
            continue

        mismatches.append((p, x, y))
        last = i
        if not (x_known and y_known):
            uncertified.append(p)
        elif (x == inf) != (y == inf):
            return TypeEquivalenceVerdict(
                IsoStatus.NON_ISOMORPHIC, ((p, x, y),),
                f"infinite against finite divisibility at {p}",
            )

    witness: tuple[tuple[int, float, float], ...] = tuple(mismatches)
    certified: int = len(mismatches) - len(uncertified)
    if certified >= threshold:
        return TypeEquivalenceVerdict(
            IsoStatus.NON_ISOMORPHIC, witness,
            f"{certified} differing primes among the first {bound}",
        )

    if uncertified:
        # Approximations can still move towards infinity
        return TypeEquivalenceVerdict(
            IsoStatus.UNKNOWN_AT_BOUND, witness,
            "only approximations differ at "
            + ", ".join(map(str, uncertified)),
        )

    if last < bound // 2:
        return TypeEquivalenceVerdict(
            IsoStatus.ISOMORPHIC, witness,
            f"{len(mismatches)} finite differences, none past prime "
            f"{nth_prime(bound // 2)}",
        )

    return TypeEquivalenceVerdict(
        IsoStatus.UNKNOWN_AT_BOUND, witness,
        f"{len(mismatches)} differing primes, below the threshold "
        f"{threshold}",
    )


def e0_type(stream: Callable[[int], int]) -> DivisibilityType:
    """Get the type with entry ``f(n)`` at prime ``p_n``."""
    return DivisibilityType.from_function(
        lambda p: stream(prime_position(p)), f"e0[{stream}]",
    )


def e0_to_tfab1(stream: Callable[[int], int]) -> SubgroupDiagram:
    """Reduce a bit stream to the group generated by ``1/p_n`` for ones.

    Streams differing at finitely many positions give isomorphic groups.
    """
    return rank1_from_type(e0_type(stream))


def cof_type(enumeration: Enumeration) -> DivisibilityType:
    """Get the type with entry ``1`` at ``p_k`` exactly for enumerated ``k``."""
    def approximation(p: int, stage: int) -> int:
        return int(enumeration.contains(prime_position(p), stage))

    def limit(p: int) -> float:
        return int(enumeration.decide(prime_position(p)))  # type: ignore

    return DivisibilityType(
        approximation, None if enumeration.decide is None else limit,
        f"cof[{enumeration.name}]",
    )


def cof_to_tfab1(enumeration: Enumeration) -> SubgroupDiagram:
    """Reduce an enumeration to a rank-1 group.

    The output is isomorphic to the group generated by all ``1/p`` iff the
    enumerated set is cofinite.
    """
    return rank1_from_type(cof_type(enumeration))


def _zigzag(n: int) -> int:
    return 2 * n - 1 if n > 0 else -2 * n


def _unzigzag(z: int) -> int:
    return (z + 1) // 2 if z % 2 else -(z // 2)


class _WithZ(DerivedStream):
    def __init__(self, group: DiagramStream) -> None:
        super().__init__(GROUP)
        self.group: DiagramStream = group

    def _compute(self, stage: int, sym: str, args: tuple[int, ...],
                 ) -> int | None:
        parts: list[tuple[int, int]] = [unpair(arg) for arg in args]
        if sym == "e":
            res: int | None = self.group.lookup(stage, "e", ())
            n: int = 0
        elif sym == "-":
            (g, z), = parts
            res = self.group.lookup(stage, "-", (g,))
            n = -_unzigzag(z)
        else:
            (g, z), (h, w) = parts
            res = self.group.lookup(stage, "+", (g, h))
            n = _unzigzag(z) + _unzigzag(w)

        return None if res is None else pair(res, _zigzag(n))


def add_Z(group: DiagramStream) -> DiagramStream:  # noqa: N802
    """Get the direct sum with the integers.

    The element ``(g, n)`` gets code ``pair(g, z)`` where ``z`` is ``n`` in
    the order ``0, 1, -1, 2, -2, ...``.
    """
    return _WithZ(group)


def multiple(stream: DiagramStream, stage: int, m: int, code: int,
             ) -> int | None:
    """Compute ``m * x`` through committed facts, ``None`` if unknown."""
    if m < 0:
        if (res := multiple(stream, stage, -m, code)) is None:
            return None

        return stream.lookup(stage, "-", (res,))

    result: int | None = stream.lookup(stage, "e", ())
    base: int | None = code
    while m and result is not None and base is not None:
        if m & 1:
            result = stream.lookup(stage, "+", (result, base))

        m >>= 1
        if m:
            base = stream.lookup(stage, "+", (base, base))

    return None if m and base is None else result


def combination(stream: DiagramStream, stage: int, coeffs: Sequence[int],
                codes: Sequence[int]) -> int | None:
    """Compute an integer combination through committed facts."""
    total: int | None = stream.lookup(stage, "e", ())
    for coeff, code in zip(coeffs, codes):
        term: int | None = multiple(stream, stage, coeff, code)
        if total is None or term is None:
            return None

        total = stream.lookup(stage, "+", (total, term))

    return total


def _coefficient_vectors(size: int, bound: int) -> Iterator[tuple[int, ...]]:
    for weight in range(1, bound + 1):
        for coeffs in product(range(-weight, weight + 1), repeat=size):
            if max(map(abs, coeffs)) != weight:
                continue

            if next(c for c in coeffs if c) > 0:
                yield coeffs


def independence_check(stream: DiagramStream, codes: Sequence[int],
                       stage: int, bound: int) -> tuple[int, ...] | None:
    """Search for an integer relation between elements.

    :param stream: a group diagram
    :param codes: the elements
    :param stage: the stage to read facts at
    :param bound: the largest absolute coefficient to try
    :return: a relation ``m`` with ``sum(m_i * x_i) = 0`` committed, or
             ``None`` when independence isn't refuted
    """
    zero: int | None = stream.lookup(stage, "e", ())
    if zero is None:
        return None

    for coeffs in _coefficient_vectors(len(codes), bound):
        if combination(stream, stage, coeffs, codes) == zero:
            logger.debug("Relation %s between %s", coeffs, list(codes))
            return coeffs

    return None


def witnessed_divisibility(stream: DiagramStream, code: int, n: int,
                           stage: int, search: int | None = None,
                           ) -> int | None:
    """Search for ``y`` with ``n * y = x`` among the first codes.

    Divisibility is only semi-decidable in a free-standing diagram.

    :param stream: a group diagram
    :param code: the element ``x``
    :param n: the divisor
    :param stage: the stage to read facts at
    :param search: the number of codes to try, by default ``stage + 1``
    :return: the witness ``y``, or ``None`` if none is seen
    """
    for y in range(stage + 1 if search is None else search):
        if multiple(stream, stage, n, y) == code:
            return y

    return None
