# Copyright (C) 2024 Nice Zombies
"""Bit streams, enumerations of sets and event detectors."""
from __future__ import annotations

__all__: list[str] = [
    "BitStream",
    "Detector",
    "Enumeration",
    "OnesCount",
    "RunOfOnes",
    "StepCounter",
    "detector_family",
]

import re
from abc import ABC, abstractmethod
from math import lcm
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence

_match_stream = re.compile(r"([01]*)(?:\(([01]+)\))?").fullmatch


class BitStream:
    """An eventually periodic stream of bits.

    :param prefix: the bits before the period
    :param period: the bits repeated forever
    """

    def __init__(self, prefix: Sequence[int] = (), period: Sequence[int] = (0,),
                 ) -> None:
        """Create a new bit stream."""
        if not period:
            msg: str = "The period must be nonempty"
            raise ValueError(msg)

        if any(bit not in {0, 1} for bit in (*prefix, *period)):
            msg = "Streams only contain the bits 0 and 1"
            raise ValueError(msg)

        self.prefix: tuple[int, ...] = tuple(prefix)
        self.period: tuple[int, ...] = tuple(period)

    @classmethod
    def parse(cls, text: str) -> BitStream:
        """Parse a literal such as ``"0110(01)"``.

        Without a parenthesized period the stream continues with zeros.

        Example:
            >>> from effalg import BitStream
            >>> stream = BitStream.parse("1(10)")
            >>> [stream(n) for n in range(6)]
            [1, 1, 0, 1, 0, 1]

        """
        if not (match := _match_stream(text.strip())):
            msg: str = f"Invalid bit stream {text!r}"
            raise ValueError(msg)

        prefix, period = match.groups()
        return cls(
            [int(bit) for bit in prefix],
            [int(bit) for bit in period or "0"],
        )

    def __call__(self, n: int) -> int:
        """Get bit ``n``."""
        if n < len(self.prefix):
            return self.prefix[n]

        return self.period[(n - len(self.prefix)) % len(self.period)]

    def __str__(self) -> str:
        """Convert to the literal notation."""
        prefix: str = "".join(map(str, self.prefix))
        return f"{prefix}({''.join(map(str, self.period))})"

    def __repr__(self) -> str:
        """Get the representation."""
        return f"BitStream.parse({str(self)!r})"

    def flip(self) -> BitStream:
        """Flip every bit."""
        return BitStream(
            [1 - bit for bit in self.prefix], [1 - bit for bit in self.period],
        )

    def e0_equivalent(self, other: BitStream) -> bool:
        """Check if two streams differ at finitely many positions."""
        start: int = max(len(self.prefix), len(other.prefix))
        span: int = lcm(len(self.period), len(other.period))
        return all(self(n) == other(n) for n in range(start, start + span))

    def ones(self) -> float:
        """Count the ones, ``inf`` if there are infinitely many."""
        if any(self.period):
            return float("inf")

        return sum(self.prefix)


BitStream.__module__ = "effalg"


class Enumeration:
    """A monotone enumeration of a set of naturals.

    Element ``n`` is enumerated at stage ``entry(n)``, never before stage
    ``n``. A decider, when known, makes limit questions testable.

    :param entry: the stage at which a natural enters, ``None`` for never
    :param name: a name for reports
    :param decide: the membership predicate of the limit set
    :param finite: whether the limit set is finite, if known
    :param cofinite: whether the limit set is cofinite, if known
    """

    def __init__(
        self,
        entry: Callable[[int], int | None],
        name: str = "W",
        *,
        decide: Callable[[int], bool] | None = None,
        finite: bool | None = None,
        cofinite: bool | None = None,
    ) -> None:
        """Create a new enumeration."""
        self.entry: Callable[[int], int | None] = entry
        self.name: str = name
        self.decide: Callable[[int], bool] | None = decide
        self.finite: bool | None = finite
        self.cofinite: bool | None = cofinite

    def __repr__(self) -> str:
        """Get the representation."""
        return f"Enumeration({self.name!r})"

    def enumerated(self, stage: int) -> frozenset[int]:
        """Get the naturals enumerated by a stage."""
        return frozenset(
            n for n in range(stage + 1)
            if (entered := self.entry(n)) is not None
            and max(entered, n) <= stage
        )

    def contains(self, n: int, stage: int) -> bool:
        """Check if a natural is enumerated by a stage."""
        entered: int | None = self.entry(n)
        return entered is not None and max(entered, n) <= stage

    @classmethod
    def of_predicate(cls, predicate: Callable[[int], bool], name: str, *,
                     delay: int = 0, finite: bool | None = None,
                     cofinite: bool | None = None) -> Enumeration:
        """Enumerate a decidable set, each element ``delay`` stages late."""
        return cls(
            lambda n: n + delay if predicate(n) else None, name,
            decide=predicate, finite=finite, cofinite=cofinite,
        )

    @classmethod
    def everything(cls) -> Enumeration:
        """Enumerate all naturals."""
        return cls.of_predicate(
            lambda _: True, "all", finite=False, cofinite=True,
        )

    @classmethod
    def nothing(cls) -> Enumeration:
        """Enumerate the empty set."""
        return cls.of_predicate(
            lambda _: False, "none", finite=True, cofinite=False,
        )

    @classmethod
    def finite_set(cls, values: Iterable[int]) -> Enumeration:
        """Enumerate a finite set."""
        members: frozenset[int] = frozenset(values)
        return cls.of_predicate(
            members.__contains__, f"finite{sorted(members)}", finite=True,
            cofinite=False,
        )

    @classmethod
    def cofinite_set(cls, excluded: Iterable[int]) -> Enumeration:
        """Enumerate all naturals but finitely many."""
        missing: frozenset[int] = frozenset(excluded)
        return cls.of_predicate(
            lambda n: n not in missing, f"cofinite{sorted(missing)}",
            finite=False, cofinite=True,
        )

    @classmethod
    def multiples(cls, modulus: int, residue: int = 0) -> Enumeration:
        """Enumerate an arithmetic progression."""
        return cls.of_predicate(
            lambda n: n % modulus == residue, f"{residue}+{modulus}N",
            finite=False, cofinite=modulus == 1,
        )


Enumeration.__module__ = "effalg"


class Detector(ABC):
    """A monotone event detector over prefixes of a bit stream."""

    def __init__(self, index: int) -> None:
        """Create a new detector."""
        self.index: int = index

    @abstractmethod
    def fires(self, stream: Callable[[int], int], stage: int) -> bool:
        """Check if the event is seen in the first ``stage`` bits."""

    def __repr__(self) -> str:
        """Get the representation."""
        return f"{type(self).__name__}({self.index})"


Detector.__module__ = "effalg"


class OnesCount(Detector):
    """Fires once ``index`` ones have been seen."""

    def fires(self, stream: Callable[[int], int], stage: int) -> bool:
        """Check if the event is seen in the first ``stage`` bits."""
        if not self.index:
            return True

        return sum(stream(n) for n in range(stage)) >= self.index


class RunOfOnes(Detector):
    """Fires once ``index`` consecutive ones have been seen."""

    def fires(self, stream: Callable[[int], int], stage: int) -> bool:
        """Check if the event is seen in the first ``stage`` bits."""
        if not self.index:
            return True

        run: int = 0

        for n in range(stage):
            run = run + 1 if stream(n) else 0
            if run >= self.index:
                return True

        return False


class StepCounter(Detector):
    """Fires once the first ``index`` programs have halted.

    :param index: the number of programs to wait for
    :param runtime: the halting step of a program, ``None`` if it runs
                    forever
    """

    def __init__(self, index: int, runtime: Callable[[int], int | None],
                 ) -> None:
        """Create a new step counter."""
        super().__init__(index)
        self.runtime: Callable[[int], int | None] = runtime

    def fires(self, stream: Callable[[int], int], stage: int) -> bool:
        """Check if the event is seen in the first ``stage`` bits."""
        for program in range(self.index):
            steps: int | None = self.runtime(program)
            if steps is None or steps > stage:
                return False

        return True


OnesCount.__module__ = "effalg"
RunOfOnes.__module__ = "effalg"
StepCounter.__module__ = "effalg"


def detector_family(kind: str, runtime: Callable[[int], int | None] | None
                    = None) -> Callable[[int], Detector]:
    """Get a nested detector family by name.

    :param kind: ``"ones"``, ``"runs"`` or ``"steps"``
    :param runtime: the halting steps for ``"steps"``
    :return: the family, indexed by naturals
    """
    if kind == "ones":
        return OnesCount

    if kind == "runs":
        return RunOfOnes

    if kind == "steps":
        if runtime is None:
            msg: str = "Step counters need a runtime"
            raise ValueError(msg)

        return lambda index: StepCounter(index, runtime)

    msg = f"Unknown detector family {kind!r}"
    raise ValueError(msg)
