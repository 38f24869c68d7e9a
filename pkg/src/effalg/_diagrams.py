# Copyright (C) 2024 Nice Zombies
"""Atomic diagrams of structures with universe omega."""
from __future__ import annotations

__all__: list[str] = [
    "CompositionError",
    "CorruptStreamError",
    "DerivedStream",
    "DiagramStream",
    "EmittedStream",
    "Fact",
    "JoinedStream",
    "MalformedFactError",
    "Operator",
    "RawDiagram",
    "Relabeling",
    "Signature",
    "Symbol",
    "audit_stream",
    "compose",
    "decode_fact",
    "fact_index",
    "join",
    "pair",
    "pair_tuple",
    "pair_with_constant",
    "project",
    "read_diagram",
    "relabel",
    "unpair",
    "unpair_tuple",
    "write_diagram",
]

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import isqrt
from typing import TYPE_CHECKING, Any, NamedTuple

import jsonyx

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator, Sequence

    from typing import Protocol

    # pylint: disable-next=R0903
    class _SupportsWrite(Protocol):
        def write(self, s: str, /) -> object:  # type: ignore
            """Write string."""

    _Key = tuple[str, tuple[int, ...]]

logger: logging.Logger = logging.getLogger(__name__)


def pair(a: int, b: int) -> int:
    """Cantor pairing of two naturals.

    :param a: the first natural
    :param b: the second natural
    :return: the code of ``(a, b)``

    Example:
        >>> from effalg import pair
        >>> pair(0, 0), pair(1, 0), pair(0, 1), pair(2, 3)
        (0, 1, 2, 18)

    """
    if a < 0 or b < 0:
        msg: str = "Cantor pairing is only defined on naturals"
        raise ValueError(msg)

    return (a + b) * (a + b + 1) // 2 + b


def unpair(z: int) -> tuple[int, int]:
    """Invert :func:`pair`."""
    if z < 0:
        msg: str = "Cantor pairing is only defined on naturals"
        raise ValueError(msg)

    w: int = (isqrt(8 * z + 1) - 1) // 2
    b: int = z - w * (w + 1) // 2
    return w - b, b


def pair_tuple(values: Sequence[int]) -> int:
    """Iterated Cantor pairing of a nonempty tuple, folded from the right."""
    if not values:
        msg: str = "Can't pair an empty tuple"
        raise ValueError(msg)

    code: int = values[-1]
    for value in reversed(values[:-1]):
        code = pair(value, code)

    return code


def unpair_tuple(z: int, length: int) -> tuple[int, ...]:
    """Invert :func:`pair_tuple` for tuples of the given length."""
    if length < 1:
        msg: str = "Tuple length must be positive"
        raise ValueError(msg)

    values: list[int] = []
    for _ in range(length - 1):
        head, z = unpair(z)
        values.append(head)

    values.append(z)
    return tuple(values)


class MalformedFactError(ValueError):
    """An atomic fact that doesn't fit its signature.

    :param msg: an error message
    :param fact: the offending fact or raw record
    """

    def __init__(self, msg: str, fact: object) -> None:
        """Create a new malformed fact error."""
        super().__init__(f"{msg}: {fact!r}")
        self.msg: str = msg
        self.fact: object = fact


class CorruptStreamError(ValueError):
    """A diagram stream that contradicts its own commitments.

    :param msg: an error message
    :param key: the symbol and arguments of the query
    """

    def __init__(self, msg: str, key: tuple[str, tuple[int, ...]]) -> None:
        """Create a new corrupt stream error."""
        sym, args = key
        super().__init__(f"{msg}: {sym}{list(args)}")
        self.msg: str = msg
        self.key: tuple[str, tuple[int, ...]] = key


class CompositionError(TypeError):
    """Operators whose signatures don't line up."""


MalformedFactError.__module__ = "effalg"
CorruptStreamError.__module__ = "effalg"
CompositionError.__module__ = "effalg"


class Symbol(NamedTuple):
    """An operation or constant symbol."""

    name: str
    arity: int

    @property
    def kind(self) -> str:
        """Either ``"constant"`` or ``"operation"``."""
        return "constant" if self.arity == 0 else "operation"


@dataclass(frozen=True)
class Signature:
    """An operational signature.

    :param name: the name of the signature
    :param symbols: the symbols, in canonical order
    """

    name: str
    symbols: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        """Validate the symbols."""
        names: list[str] = [symbol.name for symbol in self.symbols]
        if len(set(names)) != len(names):
            msg: str = f"Duplicate symbols in {self.name}"
            raise ValueError(msg)

        if any(symbol.arity < 0 for symbol in self.symbols):
            msg = f"Negative arity in {self.name}"
            raise ValueError(msg)

        if not self.symbols:
            msg = f"Empty signature {self.name}"
            raise ValueError(msg)

    def slot(self, name: str) -> int:
        """Get the position of a symbol in the canonical order."""
        for i, symbol in enumerate(self.symbols):
            if symbol.name == name:
                return i

        msg: str = f"Unknown symbol in {self.name}"
        raise MalformedFactError(msg, name)

    def arity(self, name: str) -> int:
        """Get the arity of a symbol."""
        return self.symbols[self.slot(name)].arity

    def __contains__(self, name: object) -> bool:
        """Check if a symbol belongs to this signature."""
        return any(symbol.name == name for symbol in self.symbols)


Signature.__module__ = "effalg"
Symbol.__module__ = "effalg"


class Fact(NamedTuple):
    """An atomic fact ``sym(args) = res`` of an operational structure."""

    sym: str
    args: tuple[int, ...]
    res: int


Fact.__module__ = "effalg"


def _check_query(signature: Signature, sym: str, args: Sequence[int],
                 ) -> tuple[int, ...]:
    if len(args) != signature.arity(sym):
        msg: str = f"{sym} expects {signature.arity(sym)} arguments"
        raise MalformedFactError(msg, (sym, list(args)))

    if any(arg < 0 for arg in args):
        msg = "Element codes are naturals"
        raise MalformedFactError(msg, (sym, list(args)))

    return tuple(args)


def fact_index(signature: Signature, fact: Fact | tuple[str, Sequence[int],
                                                        int]) -> int:
    """Get the canonical index of an atomic fact.

    The index is ``k * code + slot`` where ``k`` is the number of symbols,
    ``slot`` the position of the symbol and ``code`` the iterated Cantor
    pairing of the arguments followed by the result.

    :param signature: the signature of the structure
    :param fact: a fact ``(symbol, args, result)``
    :raises MalformedFactError: for an unknown symbol or arity mismatch
    :return: the canonical index

    Example:
        >>> from effalg import fact_index
        >>> from effalg.signatures import GROUP
        >>> fact_index(GROUP, ("e", (), 0)), fact_index(GROUP, ("+", (0, 0), 0))
        (0, 1)

    """
    sym, args, res = fact
    args = _check_query(signature, sym, args)
    if res < 0:
        msg: str = "Element codes are naturals"
        raise MalformedFactError(msg, fact)

    code: int = pair_tuple((*args, res))
    return len(signature.symbols) * code + signature.slot(sym)


def decode_fact(signature: Signature, index: int) -> Fact:
    """Invert :func:`fact_index`."""
    if index < 0:
        msg: str = "Fact indices are naturals"
        raise MalformedFactError(msg, index)

    code, slot = divmod(index, len(signature.symbols))
    symbol: Symbol = signature.symbols[slot]
    *args, res = unpair_tuple(code, symbol.arity + 1)
    return Fact(symbol.name, tuple(args), res)


class DiagramStream(ABC):
    """A monotone, stagewise presentation of an atomic diagram.

    Queries at a finite stage return ``None`` when the answer isn't
    committed yet. A committed answer never changes at later stages.

    :param signature: the signature of the structure
    """

    def __init__(self, signature: Signature) -> None:
        """Create a new diagram stream."""
        self.signature: Signature = signature

    @abstractmethod
    def lookup(self, stage: int, sym: str, args: tuple[int, ...],
               ) -> int | None:
        """Look up a validated query."""

    @abstractmethod
    def facts(self, stage: int) -> Iterator[tuple[Fact, int]]:
        """Iterate over the facts committed by a stage with their stages."""

    def read_op(self, stage: int, sym: str, args: Sequence[int] = (),
                ) -> int | None:
        """Read ``sym(args)`` at a stage.

        :param stage: the stage
        :param sym: the symbol
        :param args: the argument codes
        :raises MalformedFactError: for an unknown symbol or arity mismatch
        :raises CorruptStreamError: for contradictory commitments
        :return: the result code, or ``None`` if unknown at this stage
        """
        return self.lookup(stage, sym, _check_query(self.signature, sym,
                                                    args))

    def bit(self, stage: int, index: int) -> int | None:
        """Read the atomic diagram at a canonical index."""
        fact: Fact = decode_fact(self.signature, index)
        if (res := self.lookup(stage, fact.sym, fact.args)) is None:
            return None

        return int(res == fact.res)


DiagramStream.__module__ = "effalg"


class EmittedStream(DiagramStream):
    """A stream that commits facts stage by stage into a table."""

    def __init__(self, signature: Signature) -> None:
        """Create a new emitted stream."""
        super().__init__(signature)
        self._table: dict[_Key, tuple[int, int]] = {}
        self._log: list[tuple[Fact, int]] = []
        self._stage: int = -1

    @abstractmethod
    def _step(self, stage: int) -> None:
        """Commit the facts of a stage."""

    def advance(self, stage: int) -> None:
        """Run the construction through a stage."""
        while self._stage < stage:
            self._stage += 1
            self._step(self._stage)

    def _commit(self, sym: str, args: tuple[int, ...], res: int) -> None:
        key: _Key = (sym, args)
        if (old := self._table.get(key)) is not None:
            if old[0] != res:
                msg: str = f"Committed both {old[0]} and {res}"
                raise CorruptStreamError(msg, key)

            return

        self._table[key] = res, self._stage
        self._log.append((Fact(sym, args, res), self._stage))

    def lookup(self, stage: int, sym: str, args: tuple[int, ...],
               ) -> int | None:
        """Look up a validated query."""
        self.advance(stage)
        entry: tuple[int, int] | None = self._table.get((sym, args))
        if entry is None or entry[1] > stage:
            return None

        return entry[0]

    def facts(self, stage: int) -> Iterator[tuple[Fact, int]]:
        """Iterate over the facts committed by a stage with their stages."""
        self.advance(stage)
        for fact, committed in self._log:
            if committed > stage:
                break

            yield fact, committed


EmittedStream.__module__ = "effalg"


def _row(arity: int, stage: int) -> Iterator[tuple[int, ...]]:
    if not arity:
        if not stage:
            yield ()

        return

    for args in product(range(stage + 1), repeat=arity):
        if stage in args:
            yield args


class DerivedStream(EmittedStream):
    """A stream computed fact by fact from other streams.

    At stage ``s`` the queries whose largest argument is ``s`` are asked;
    queries that come back unknown are retried at every later stage.
    """

    def __init__(self, signature: Signature) -> None:
        """Create a new derived stream."""
        super().__init__(signature)
        self._pending: list[_Key] = []

    @abstractmethod
    def _compute(self, stage: int, sym: str, args: tuple[int, ...],
                 ) -> int | None:
        """Compute a fact from the inputs at a stage."""

    def _step(self, stage: int) -> None:
        queries: list[_Key] = self._pending
        self._pending = []
        for symbol in self.signature.symbols:
            queries.extend(
                (symbol.name, args) for args in _row(symbol.arity, stage)
            )

        for sym, args in queries:
            if (res := self._compute(stage, sym, args)) is None:
                self._pending.append((sym, args))
            else:
                self._commit(sym, args, res)


DerivedStream.__module__ = "effalg"


class RawDiagram(EmittedStream):
    """A diagram replayed from recorded ``(stage, bit, value)`` events."""

    def __init__(self, signature: Signature,
                 events: Iterable[tuple[int, int, int]]) -> None:
        """Create a new raw diagram."""
        super().__init__(signature)
        self._events: dict[int, list[tuple[int, int]]] = {}
        for stage, index, value in events:
            if value not in {0, 1} or stage < 0:
                msg: str = "Expecting a bit and a natural stage"
                raise MalformedFactError(msg, (stage, index, value))

            self._events.setdefault(stage, []).append((index, value))

        self._refuted: set[Fact] = set()

    def _step(self, stage: int) -> None:
        for index, value in self._events.get(stage, ()):
            fact: Fact = decode_fact(self.signature, index)
            key: _Key = (fact.sym, fact.args)
            if value:
                if fact in self._refuted:
                    msg: str = f"Result {fact.res} was refuted"
                    raise CorruptStreamError(msg, key)

                self._commit(fact.sym, fact.args, fact.res)
            elif (entry := self._table.get(key)) and entry[0] == fact.res:
                msg = f"Refuting committed {fact.res}"
                raise CorruptStreamError(msg, key)
            else:
                self._refuted.add(fact)


RawDiagram.__module__ = "effalg"


class Relabeling:
    """A permutation of omega moving finitely many codes.

    :param images: the images of ``0, ..., n - 1``, a permutation of them
    """

    def __init__(self, images: Sequence[int]) -> None:
        """Create a new relabeling."""
        if sorted(images) != list(range(len(images))):
            msg: str = "Expecting a permutation of an initial segment"
            raise ValueError(msg)

        self.images: tuple[int, ...] = tuple(images)

    def __call__(self, code: int) -> int:
        """Apply the relabeling."""
        return self.images[code] if code < len(self.images) else code

    def inverse(self) -> Relabeling:
        """Get the inverse relabeling."""
        preimages: list[int] = [0] * len(self.images)
        for code, image in enumerate(self.images):
            preimages[image] = code

        return Relabeling(preimages)

    def then(self, other: Relabeling) -> Relabeling:
        """Compose: first apply ``self``, then ``other``."""
        size: int = max(len(self.images), len(other.images))
        return Relabeling([other(self(code)) for code in range(size)])


Relabeling.__module__ = "effalg"


class _Relabeled(DiagramStream):
    def __init__(self, stream: DiagramStream, relabeling: Relabeling) -> None:
        super().__init__(stream.signature)
        self.source: DiagramStream = stream
        self.relabeling: Relabeling = relabeling
        self._back: Relabeling = relabeling.inverse()

    def lookup(self, stage: int, sym: str, args: tuple[int, ...],
               ) -> int | None:
        res: int | None = self.source.lookup(
            stage, sym, tuple(map(self._back, args)),
        )
        return None if res is None else self.relabeling(res)

    def facts(self, stage: int) -> Iterator[tuple[Fact, int]]:
        for fact, committed in self.source.facts(stage):
            yield Fact(
                fact.sym, tuple(map(self.relabeling, fact.args)),
                self.relabeling(fact.res),
            ), committed


def relabel(stream: DiagramStream, relabeling: Relabeling) -> DiagramStream:
    """Get the isomorphic copy of a stream whose codes are permuted.

    :param stream: a diagram stream
    :param relabeling: sends old codes to new codes
    :return: the permuted copy
    """
    return _Relabeled(stream, relabeling)


class _Projection(DiagramStream):
    def __init__(self, joined: JoinedStream, index: int) -> None:
        self.joined: JoinedStream = joined
        self.index: int = index
        super().__init__(joined.component(index).signature)

    def lookup(self, stage: int, sym: str, args: tuple[int, ...],
               ) -> int | None:
        return self.joined.component(self.index).lookup(stage, sym, args)

    def facts(self, stage: int) -> Iterator[tuple[Fact, int]]:
        return self.joined.component(self.index).facts(stage)

    def bit(self, stage: int, index: int) -> int | None:
        return self.joined.bit(stage, pair(self.index, index))


class JoinedStream:
    """The join of countably many diagram streams.

    Bit ``<i, n>`` of the join is bit ``n`` of component ``i``.

    :param components: a finite sequence or a function from indices to
                       streams
    """

    def __init__(
        self,
        components: Sequence[DiagramStream] | Callable[[int], DiagramStream],
    ) -> None:
        """Create a new joined stream."""
        self.size: int | None
        if callable(components):
            self.size = None
            self._get: Callable[[int], DiagramStream] = lru_cache(
                maxsize=None,
            )(components)
        else:
            items: tuple[DiagramStream, ...] = tuple(components)
            self.size = len(items)
            self._get = items.__getitem__

    def component(self, index: int) -> DiagramStream:
        """Get a component."""
        if index < 0 or (self.size is not None and index >= self.size):
            msg: str = f"No component {index}"
            raise IndexError(msg)

        return self._get(index)

    def bit(self, stage: int, index: int) -> int | None:
        """Read the joined diagram at a global index."""
        i, n = unpair(index)
        return self.component(i).bit(stage, n)

    def project(self, index: int) -> DiagramStream:
        """Get component ``index`` back as a stream."""
        self.component(index)
        return _Projection(self, index)


JoinedStream.__module__ = "effalg"


def join(
    streams: Sequence[DiagramStream] | Callable[[int], DiagramStream],
) -> JoinedStream:
    """Join diagram streams.

    :param streams: a finite sequence or a function from indices to streams
    :return: the joined stream
    """
    return JoinedStream(streams)


def project(joined: JoinedStream, index: int) -> DiagramStream:
    """Project a joined stream onto one of its components."""
    return joined.project(index)


class Operator:
    """A Turing operator between classes of structures.

    A signature of ``None`` stands for Cantor space: bit streams given as
    total functions from naturals to ``0`` or ``1``.

    :param function: the operator
    :param source: the signature of the inputs
    :param target: the signature of the outputs
    :param name: a name for reports
    """

    def __init__(
        self,
        function: Callable[[Any], Any],
        source: Signature | None,
        target: Signature | None,
        name: str = "operator",
    ) -> None:
        """Create a new operator."""
        self.function: Callable[[Any], Any] = function
        self.source: Signature | None = source
        self.target: Signature | None = target
        self.name: str = name

    def __call__(self, value: Any) -> Any:
        """Apply the operator."""
        return self.function(value)

    def __repr__(self) -> str:
        """Get the representation."""
        return f"Operator({self.name!r})"

    @classmethod
    def identity(cls, signature: Signature | None) -> Operator:
        """Get the identity operator on a class."""
        return cls(lambda value: value, signature, signature, "identity")


Operator.__module__ = "effalg"


def compose(outer: Operator, inner: Operator) -> Operator:
    """Compose two operators, ``inner`` first.

    :param outer: the operator applied last
    :param inner: the operator applied first
    :raises CompositionError: when the signatures don't match
    :return: the composite operator
    """
    if inner.target != outer.source:
        msg: str = (
            f"Can't feed {inner.name} into {outer.name}: signatures differ"
        )
        raise CompositionError(msg)

    return Operator(
        lambda value: outer(inner(value)), inner.source, outer.target,
        f"{outer.name}.{inner.name}",
    )


def pair_with_constant(constant: DiagramStream, operator: Operator,
                       ) -> Operator:
    """Pair a fixed structure with the output of an operator.

    :param constant: the fixed structure
    :param operator: the operator
    :raises CompositionError: when the signatures don't match
    :return: an operator emitting the join of ``constant`` and the output
    """
    if operator.target != constant.signature:
        msg: str = f"Can't pair {operator.name} with a constant structure"
        raise CompositionError(msg)

    return Operator(
        lambda value: join([constant, operator(value)]), operator.source,
        operator.target, f"pair({operator.name})",
    )


def audit_stream(stream: DiagramStream, stages: Iterable[int]) -> list[str]:
    """Audit monotonicity and functionality of a stream.

    :param stream: the stream
    :param stages: increasing stages to compare
    :return: the violations, empty when clean
    """
    violations: list[str] = []
    previous: dict[_Key, int] = {}
    for stage in stages:
        current: dict[_Key, int] = {}
        for fact, committed in stream.facts(stage):
            key: _Key = (fact.sym, fact.args)
            if committed > stage:
                violations.append(f"stage {stage}: {fact} from the future")
            elif current.setdefault(key, fact.res) != fact.res:
                violations.append(f"stage {stage}: {fact} not functional")
            elif stream.lookup(stage, fact.sym, fact.args) != fact.res:
                violations.append(f"stage {stage}: {fact} not readable")

        for key, res in previous.items():
            if current.get(key) != res:
                violations.append(f"stage {stage}: {key} changed")

        previous = current

    return violations


def write_diagram(stream: DiagramStream, stage: int, fp: _SupportsWrite, *,
                  raw: bool = False) -> int:
    """Write the facts committed by a stage as JSON lines.

    :param stream: the stream
    :param stage: the last stage to write
    :param fp: an open text file
    :param raw: write only bit indices and values
    :return: the number of lines written
    """
    count: int = 0
    for fact, committed in stream.facts(stage):
        index: int = fact_index(stream.signature, fact)
        if raw:
            record: dict[str, Any] = {
                "bit": index, "val": 1, "stage": committed,
            }
        else:
            record = {
                "stage": committed,
                "fact": {
                    "sym": fact.sym, "args": list(fact.args), "res": fact.res,
                },
                "bit": index,
            }

        jsonyx.dump(record, fp)
        count += 1

    return count


def read_diagram(lines: Iterable[str], signature: Signature) -> RawDiagram:
    """Read a diagram written by :func:`write_diagram` (either format).

    :param lines: the JSON lines
    :param signature: the signature of the structure
    :raises MalformedFactError: for records that don't fit the signature
    :return: the replayed diagram
    """
    events: list[tuple[int, int, int]] = []
    for line in lines:
        if not line.strip():
            continue

        try:
            record: Any = jsonyx.loads(line)
            stage: int = record["stage"]
            if "fact" in record:
                raw_fact: Any = record["fact"]
                fact: Fact = Fact(
                    raw_fact["sym"], tuple(raw_fact["args"]), raw_fact["res"],
                )
                index: int = record["bit"]
                if index != fact_index(signature, fact):
                    msg: str = "Bit doesn't match the canonical index"
                    raise MalformedFactError(msg, record)

                value: int = 1
            else:
                index, value = record["bit"], record["val"]
        except (KeyError, TypeError) as exc:
            msg = "Incomplete diagram record"
            raise MalformedFactError(msg, line.strip()) from exc
        except jsonyx.JSONSyntaxError as exc:
            msg = "Invalid JSON in diagram"
            raise MalformedFactError(msg, line.strip()) from exc

        events.append((stage, index, value))

    logger.debug("Read %d diagram events", len(events))
    return RawDiagram(signature, events)
